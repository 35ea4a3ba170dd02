handle = open("events.txt", "r")
body = handle.read()
handle.close()
