point = cursor_position()
x = point[0]
y = point[1]
draw_marker(x, y)
