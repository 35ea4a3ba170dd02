holder = left
left = right
right = holder
