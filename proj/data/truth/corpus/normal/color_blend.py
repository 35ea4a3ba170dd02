def blend_channel(top, bottom, alpha):
    mixed = top * alpha + bottom * (1.0 - alpha)
    if mixed > 255:
        return 255
    if mixed < 0:
        return 0
    return round(mixed)


def blend_rgb(top, bottom, alpha):
    red = blend_channel(top[0], bottom[0], alpha)
    green = blend_channel(top[1], bottom[1], alpha)
    blue = blend_channel(top[2], bottom[2], alpha)
    return red, green, blue
