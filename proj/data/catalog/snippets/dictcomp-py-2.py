ranks = {player: 0 for player in roster}
