def rolling_checksum(payload):
    acc = 17
    for byte in payload:
        acc = (acc * 31 + byte) % 65521
    return acc


def verify_checksum(payload, expected):
    return rolling_checksum(payload) == expected
