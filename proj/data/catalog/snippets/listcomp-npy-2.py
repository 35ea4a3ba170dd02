doubled = []
for v in scores:
    doubled.append(2 * v)
