keep = low
low = high
high = keep
