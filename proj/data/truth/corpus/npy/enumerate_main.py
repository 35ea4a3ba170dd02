items = fetch_queue()
for i in range(len(items)):
    emit(i, items[i])
