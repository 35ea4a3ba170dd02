left = take_turn()
right = take_turn()
left, right = right, left
score_round(left, right)
