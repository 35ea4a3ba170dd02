words = load_glossary()
lengths = []
for w in words:
    lengths.append(len(w))
publish(lengths)
