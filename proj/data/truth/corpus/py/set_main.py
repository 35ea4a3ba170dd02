tags = gather_labels()
unique_tags = {tag for tag in tags}
register(unique_tags)
