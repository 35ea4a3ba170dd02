with open("app.log") as log_file:
    contents = log_file.readlines()
