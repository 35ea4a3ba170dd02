with open("notes.md", encoding="utf-8") as doc:
    text = doc.read()
