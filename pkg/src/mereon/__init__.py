"""Exact-arithmetic toolkit for the Mereon System polyhedra and the binary polyhedral groups."""
__version__ = "0.1.0"
