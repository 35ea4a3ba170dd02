import time


class RateLimiter:
    def __init__(self, per_second):
        self.per_second = per_second
        self.last_call = 0.0

    def wait_turn(self):
        gap = 1.0 / self.per_second
        now = time.monotonic()
        remaining = self.last_call + gap - now
        if remaining > 0:
            time.sleep(remaining)
        self.last_call = time.monotonic()
