import csv

with open("report.csv") as src:
    rows = src.readlines()
parse_rows(rows)
