"""Tests for the q-Whittaker toolkit."""
