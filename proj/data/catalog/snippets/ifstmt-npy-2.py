if len(backlog) != 0:
    drain(backlog)
