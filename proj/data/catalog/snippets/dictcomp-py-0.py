lookup = {key: val for key, val in pairs}
