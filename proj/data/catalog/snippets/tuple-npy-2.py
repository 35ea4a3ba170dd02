lat = coords[0]
lon = coords[1]
alt = coords[2]
