listings = market_feed()
prices = {}
for item, cost in listings:
    prices[item] = cost
apply_config(prices)
