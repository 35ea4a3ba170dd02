from dice import roll

a = roll()
b = roll()
tmp = a
a = b
b = tmp
announce(a, b)
