user = session.owner()
banner = f"{user} logged in"
notify(banner)
