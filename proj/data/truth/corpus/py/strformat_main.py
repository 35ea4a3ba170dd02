done = completed_count()
total = goal_count()
summary = f"{done} of {total} tasks"
notify(summary)
