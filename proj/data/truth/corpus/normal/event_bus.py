class EventBus:
    def __init__(self):
        self.handlers = {}

    def subscribe(self, topic, handler):
        slot = self.handlers.setdefault(topic, [])
        slot.append(handler)

    def publish(self, topic, payload):
        for handler in self.handlers.get(topic, []):
            handler(payload)
