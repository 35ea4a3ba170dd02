rows = table.body()
for idx, row in enumerate(rows):
    render(idx, row)
table.refresh()
