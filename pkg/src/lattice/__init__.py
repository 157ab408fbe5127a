"""Lattice-path ensembles and their diagrams."""
