lengths = [len(w) for w in words]
