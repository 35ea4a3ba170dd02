def merge_settings(base_settings, override_settings):
    merged = dict(base_settings)
    for option, value in override_settings.items():
        existing = merged.get(option)
        if isinstance(existing, dict) and isinstance(value, dict):
            merged[option] = merge_settings(existing, value)
        else:
            merged[option] = value
    return merged
