banner = str(user) + " logged in"
