class Node:
    def __init__(self, cargo):
        self.cargo = cargo
        self.tail = None


def push_front(head, cargo):
    node = Node(cargo)
    node.tail = head
    return node


def list_length(head):
    steps = 0
    while head is not None:
        steps += 1
        head = head.tail
    return steps
