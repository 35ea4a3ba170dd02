import os


def ancestors(path):
    chain = []
    current = os.path.abspath(path)
    while current != os.path.dirname(current):
        chain.append(current)
        current = os.path.dirname(current)
    chain.append(current)
    return chain
