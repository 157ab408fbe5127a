"""Identity suites, loaded by class path from configuration."""
