user = session.owner()
banner = str(user) + " logged in"
notify(banner)
