for pos in range(0, len(names)):
    store(pos, names[pos])
