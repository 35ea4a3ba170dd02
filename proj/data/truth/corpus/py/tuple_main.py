point = cursor_position()
x, y = point
draw_marker(x, y)
