stamp = str(hour) + ":" + str(minute) + ":" + str(second)
