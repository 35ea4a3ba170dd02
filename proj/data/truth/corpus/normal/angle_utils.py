import math


def normalize_degrees(angle):
    wrapped = math.fmod(angle, 360.0)
    if wrapped < 0:
        wrapped += 360.0
    return wrapped


def to_radians(angle):
    return angle * math.pi / 180.0
