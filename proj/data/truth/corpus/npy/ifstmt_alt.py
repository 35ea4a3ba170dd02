warnings = collect_warnings()
if len(warnings) > 0:
    show(warnings)
