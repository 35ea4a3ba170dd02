def spend(budget, cost):
    if cost > budget:
        raise ValueError("cost exceeds budget")
    return budget - cost


def refill(budget, amount, ceiling):
    grown = budget + amount
    if grown > ceiling:
        return ceiling
    return grown
