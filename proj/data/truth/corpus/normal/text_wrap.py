def wrap(paragraph, width):
    wrapped = []
    current = ""
    for word in paragraph.split():
        if current and len(current) + len(word) + 1 > width:
            wrapped.append(current)
            current = word
        elif current:
            current = current + " " + word
        else:
            current = word
    if current:
        wrapped.append(current)
    return wrapped
