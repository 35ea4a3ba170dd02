hosts = inventory_nodes()
seen_hosts = []
for host in hosts:
    if host not in seen_hosts:
        seen_hosts.append(host)
register(seen_hosts)
