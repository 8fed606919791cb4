"""Exact cuts of the rationals, quadratic ideals, finite lattices and simply infinite systems."""

__version__ = "0.1.0"
