banner = f"{user} logged in"
