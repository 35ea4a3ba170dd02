def pad_left(text, width, filler):
    missing = width - len(text)
    if missing <= 0:
        return text
    return filler * missing + text


def pad_right(text, width, filler):
    missing = width - len(text)
    if missing <= 0:
        return text
    return text + filler * missing
