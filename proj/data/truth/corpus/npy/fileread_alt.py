import csv

reader = open("metrics.csv", "r")
payload = reader.read()
reader.close()
parse_rows(payload)
