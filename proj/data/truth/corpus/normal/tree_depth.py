def depth(node):
    if node is None:
        return 0
    left_depth = depth(node.left)
    right_depth = depth(node.right)
    if left_depth > right_depth:
        return left_depth + 1
    return right_depth + 1
