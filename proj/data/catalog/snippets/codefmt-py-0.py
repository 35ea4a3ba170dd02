count = 0
total = 0
errors = []
