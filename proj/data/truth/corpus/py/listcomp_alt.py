words = load_glossary()
lengths = [len(w) for w in words]
publish(lengths)
