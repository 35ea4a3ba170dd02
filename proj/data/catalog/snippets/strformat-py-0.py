summary = f"{done} of {total} tasks"
