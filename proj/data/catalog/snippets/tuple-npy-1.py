width = dimensions[0]
height = dimensions[1]
