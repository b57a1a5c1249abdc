"""Partition combinatorics for covering Barbasch-Vogan duality and theta coefficients."""

__version__ = "0.1.0"
