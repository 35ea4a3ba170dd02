def locate(ordered, needle):
    lo_bound = 0
    hi_bound = len(ordered) - 1
    while lo_bound <= hi_bound:
        midpoint = (lo_bound + hi_bound) // 2
        probe = ordered[midpoint]
        if probe == needle:
            return midpoint
        if probe < needle:
            lo_bound = midpoint + 1
        else:
            hi_bound = midpoint - 1
    return -1
