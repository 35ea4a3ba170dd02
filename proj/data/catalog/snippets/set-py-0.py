unique_tags = {tag for tag in tags}
