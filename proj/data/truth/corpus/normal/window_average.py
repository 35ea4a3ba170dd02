def moving_average(readings, span):
    averages = []
    cursor = span
    while cursor <= len(readings):
        window_sum = sum(readings[cursor - span:cursor])
        averages.append(window_sum / span)
        cursor += 1
    return averages
