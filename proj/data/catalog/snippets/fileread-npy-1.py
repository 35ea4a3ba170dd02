reader = open("metrics.csv", "r")
payload = reader.read()
reader.close()
