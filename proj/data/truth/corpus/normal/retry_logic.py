import time


def call_with_retry(action, attempts, delay_seconds):
    failure = None
    while attempts > 0:
        try:
            return action()
        except ConnectionError as exc:
            failure = exc
            attempts -= 1
            time.sleep(delay_seconds)
    raise failure
