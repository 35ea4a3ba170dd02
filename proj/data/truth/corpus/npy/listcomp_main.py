numbers = sample_batch()
squares = []
for x in numbers:
    squares.append(x * x)
publish(squares)
