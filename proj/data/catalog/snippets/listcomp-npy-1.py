lengths = []
for w in words:
    lengths.append(len(w))
