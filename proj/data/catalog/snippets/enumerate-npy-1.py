for idx in range(len(rows)):
    render(idx, rows[idx])
