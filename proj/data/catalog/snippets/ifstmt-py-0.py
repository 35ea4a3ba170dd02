if pending:
    flush_queue(pending)
