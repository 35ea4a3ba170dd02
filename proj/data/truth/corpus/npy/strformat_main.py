done = completed_count()
total = goal_count()
summary = str(done) + " of " + str(total) + " tasks"
notify(summary)
