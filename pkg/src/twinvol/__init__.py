"""Twisted involutions and character degree sums for dihedral and small abelian groups."""

__version__ = "0.1.0"
