"""Hilbert series and h-vectors of invariant rings of O_t and SO_t."""

__version__ = "0.1.0"
