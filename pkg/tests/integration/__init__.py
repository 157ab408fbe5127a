"""Integration tests for the q-Whittaker toolkit."""
