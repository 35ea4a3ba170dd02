stream = open("dump.bin", "rb")
blob = stream.read()
stream.close()
