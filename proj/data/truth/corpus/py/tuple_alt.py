dimensions = window_size()
width, height = dimensions
resize_canvas(width, height)
