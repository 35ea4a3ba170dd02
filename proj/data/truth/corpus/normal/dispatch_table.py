def build_dispatcher(default_action):
    table = {}

    def register(name, action):
        table[name] = action

    def dispatch(name, payload):
        action = table.get(name, default_action)
        return action(payload)

    return register, dispatch
