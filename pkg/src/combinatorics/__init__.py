"""Fillings, patterns, splicing and the bijections between them."""
