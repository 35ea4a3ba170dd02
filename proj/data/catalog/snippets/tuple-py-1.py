width, height = dimensions
