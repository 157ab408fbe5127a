"""Core components: configuration, errors, persistence and orchestration."""
