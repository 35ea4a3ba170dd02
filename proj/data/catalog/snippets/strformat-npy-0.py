summary = str(done) + " of " + str(total) + " tasks"
