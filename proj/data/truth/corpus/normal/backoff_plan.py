def schedule(base_delay, growth, cap, steps):
    plan = []
    wait = base_delay
    step = 0
    while step < steps:
        plan.append(wait)
        wait = min(wait * growth, cap)
        step += 1
    return plan
