with open("report.csv") as src:
    rows = src.readlines()
