if len(pending) > 0:
    flush(pending)
