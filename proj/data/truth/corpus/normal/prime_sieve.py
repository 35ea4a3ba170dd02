def count_primes(limit):
    candidates = list(range(limit + 1))
    candidates[0] = 0
    candidates[1] = 0
    step = 2
    while step * step <= limit:
        if candidates[step] != 0:
            multiple = step * step
            while multiple <= limit:
                candidates[multiple] = 0
                multiple += step
        step += 1
    survivors = 0
    for value in candidates:
        if value != 0:
            survivors += 1
    return survivors
