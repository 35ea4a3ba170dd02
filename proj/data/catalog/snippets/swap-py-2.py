low, high = high, low
