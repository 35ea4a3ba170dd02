for pos, name in enumerate(names, 1):
    store(pos, name)
