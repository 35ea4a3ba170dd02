pending = poll_tasks()
if len(pending) > 0:
    flush(pending)
