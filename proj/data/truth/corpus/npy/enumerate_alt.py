rows = table.body()
for idx in range(len(rows)):
    render(idx, rows[idx])
table.refresh()
