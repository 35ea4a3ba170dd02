from dice import roll

a = roll()
b = roll()
a, b = b, a
announce(a, b)
