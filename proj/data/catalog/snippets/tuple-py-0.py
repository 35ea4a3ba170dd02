x, y = point
