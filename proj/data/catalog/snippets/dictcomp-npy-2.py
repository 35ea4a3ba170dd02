ranks = {}
for player in roster:
    ranks[player] = 0
