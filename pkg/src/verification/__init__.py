"""Identity suites and the runner that checks them."""
