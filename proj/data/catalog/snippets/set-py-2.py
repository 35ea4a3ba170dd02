flags = set(raw_flags)
