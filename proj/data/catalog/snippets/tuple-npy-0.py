x = point[0]
y = point[1]
