import metrics

count = 0
total = 0
errors = []
metrics.reset_counters()
