class Worker:
    def __init__(self, channel):
        self.channel = channel
        self.processed = 0

    def run_once(self):
        job = self.channel.take()
        if job is None:
            return False
        job.execute()
        self.processed += 1
        return True
