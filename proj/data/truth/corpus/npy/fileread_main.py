import logging

handle = open("events.txt", "r")
body = handle.read()
handle.close()
logging.info(body)
