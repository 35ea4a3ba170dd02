seen_hosts = {host for host in hosts}
