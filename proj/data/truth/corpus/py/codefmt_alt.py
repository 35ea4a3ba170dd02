import session

mode = "idle"
retries = 3
active = False
session.configure()
