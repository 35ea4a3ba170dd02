pairs = config_pairs()
lookup = {key: val for key, val in pairs}
apply_config(lookup)
