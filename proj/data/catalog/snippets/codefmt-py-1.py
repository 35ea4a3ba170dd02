mode = "idle"
retries = 3
active = False
