if warnings:
    print_report(warnings)
