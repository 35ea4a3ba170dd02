prices = {item: cost for item, cost in listings}
