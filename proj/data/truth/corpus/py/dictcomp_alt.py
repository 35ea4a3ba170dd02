listings = market_feed()
prices = {item: cost for item, cost in listings}
apply_config(prices)
