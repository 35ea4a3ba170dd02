stamp = f"{hour}:{minute}:{second}"
