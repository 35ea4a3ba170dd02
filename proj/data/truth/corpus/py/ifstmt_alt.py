warnings = collect_warnings()
if warnings:
    print_report(warnings)
