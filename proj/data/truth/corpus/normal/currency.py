def to_cents(amount_text):
    cleaned = amount_text.strip().replace(",", "")
    dot = cleaned.find(".")
    if dot < 0:
        return int(cleaned) * 100
    whole = int(cleaned[:dot])
    fraction = (cleaned[dot + 1:] + "00")[:2]
    return whole * 100 + int(fraction)


def from_cents(cents):
    return cents // 100, cents % 100
