dimensions = window_size()
width = dimensions[0]
height = dimensions[1]
resize_canvas(width, height)
