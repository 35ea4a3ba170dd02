class GradeBook:
    def __init__(self):
        self.records = {}

    def add_score(self, student, score):
        bucket = self.records.get(student)
        if bucket is None:
            bucket = []
            self.records[student] = bucket
        bucket.append(score)

    def average(self, student):
        bucket = self.records.get(student)
        if bucket is None:
            return 0.0
        return sum(bucket) / len(bucket)
