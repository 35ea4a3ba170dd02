lookup = {}
for key, val in pairs:
    lookup[key] = val
