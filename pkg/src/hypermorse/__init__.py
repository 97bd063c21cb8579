"""Discrete Morse matchings and homology data for hypersimplex subcomplexes."""

__version__ = "0.1.0"
