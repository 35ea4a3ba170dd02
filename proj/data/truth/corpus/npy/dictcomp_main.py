pairs = config_pairs()
lookup = {}
for key, val in pairs:
    lookup[key] = val
apply_config(lookup)
