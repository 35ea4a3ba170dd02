if len(warnings) > 0:
    show(warnings)
