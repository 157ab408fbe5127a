"""Unit tests for the q-Whittaker toolkit."""
