"""Dual 3-nets and 4-nets embedded in PG(2, GF(p)), with exact verification."""

__version__ = "0.1.0"
