unique_tags = []
for tag in tags:
    if tag not in unique_tags:
        unique_tags.append(tag)
