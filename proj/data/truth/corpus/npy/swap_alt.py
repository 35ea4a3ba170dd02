left = take_turn()
right = take_turn()
holder = left
left = right
right = holder
score_round(left, right)
