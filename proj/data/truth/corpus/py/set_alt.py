hosts = inventory_nodes()
seen_hosts = {host for host in hosts}
register(seen_hosts)
