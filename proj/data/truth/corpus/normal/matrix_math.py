def transpose(grid):
    result = []
    row_count = len(grid)
    col_count = len(grid[0])
    row_index = 0
    while row_index < col_count:
        fresh_row = []
        col_index = 0
        while col_index < row_count:
            fresh_row.append(grid[col_index][row_index])
            col_index += 1
        result.append(fresh_row)
        row_index += 1
    return result
