prices = {}
for item, cost in listings:
    prices[item] = cost
