"""Exact polynomial arithmetic in q, t and x."""
