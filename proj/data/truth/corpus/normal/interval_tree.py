class Interval:
    def __init__(self, begin, finish):
        self.begin = begin
        self.finish = finish

    def middle(self):
        return (self.begin + self.finish) // 2

    def contains(self, value):
        return self.begin <= value <= self.finish
