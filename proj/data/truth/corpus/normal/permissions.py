READ_FLAG = 4
WRITE_FLAG = 2
EXECUTE_FLAG = 1


def can_read(mask):
    return mask & READ_FLAG != 0


def can_write(mask):
    return mask & WRITE_FLAG != 0


def grant(mask, flag):
    return mask | flag
