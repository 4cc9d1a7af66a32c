"""Chern-Simons skein invariants and level-splitting maps for 2+1D gauge theories."""

__version__ = "0.1.0"
