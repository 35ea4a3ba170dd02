for idx, row in enumerate(rows):
    render(idx, row)
