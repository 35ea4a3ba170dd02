class StackMachine:
    def __init__(self):
        self.memory = []

    def push(self, cell):
        self.memory.append(cell)

    def pop(self):
        try:
            return self.memory.pop()
        except IndexError:
            raise IndexError("pop from empty machine") from None

    def depth(self):
        return len(self.memory)
