cursor = None; buffered = 0.0; dirty = True
