for i, value in enumerate(items):
    emit(i, value)
