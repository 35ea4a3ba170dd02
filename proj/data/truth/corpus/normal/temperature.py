def celsius_to_fahrenheit(degrees):
    return degrees * 9 / 5 + 32


def fahrenheit_to_celsius(degrees):
    return (degrees - 32) * 5 / 9


def kelvin_offset(degrees):
    return degrees + 273.15
