flags = []
for f in raw_flags:
    if f not in flags:
        flags.append(f)
