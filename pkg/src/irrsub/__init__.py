"""Exact characters, modular composition factors and restriction data for
irreducible subgroups of exceptional algebraic groups."""

__version__ = "0.1.0"
