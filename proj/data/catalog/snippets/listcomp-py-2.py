doubled = [2 * v for v in scores]
