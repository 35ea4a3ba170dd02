if backlog:
    drain_backlog(backlog)
