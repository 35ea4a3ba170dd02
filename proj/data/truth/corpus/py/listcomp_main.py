numbers = sample_batch()
squares = [x * x for x in numbers]
publish(squares)
