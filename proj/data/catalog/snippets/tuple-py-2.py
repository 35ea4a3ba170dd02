lat, lon, alt = coords
