def needs_quoting(field, delimiter):
    if delimiter in field:
        return True
    if '"' in field:
        return True
    return "\n" in field


def quote_field(field):
    doubled = field.replace('"', '""')
    return "".join(['"', doubled, '"'])
