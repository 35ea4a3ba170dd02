squares = []
for x in numbers:
    squares.append(x * x)
