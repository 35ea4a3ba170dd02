def bubble_up(heap, position):
    item = heap[position]
    while position > 0:
        parent = (position - 1) // 2
        if heap[parent] <= item:
            break
        heap[position] = heap[parent]
        position = parent
    heap[position] = item
