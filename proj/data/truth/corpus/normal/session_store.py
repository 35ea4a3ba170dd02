import secrets


class SessionStore:
    def __init__(self, lifetime_seconds):
        self.lifetime_seconds = lifetime_seconds
        self.live = {}

    def open_session(self, account, now):
        handle = secrets.token_hex(16)
        self.live[handle] = {"account": account, "expires": now + self.lifetime_seconds}
        return handle

    def owner_of(self, handle, now):
        record = self.live.get(handle)
        if record is None:
            return None
        if record["expires"] < now:
            del self.live[handle]
            return None
        return record["account"]
