pending = poll_tasks()
if pending:
    flush_queue(pending)
