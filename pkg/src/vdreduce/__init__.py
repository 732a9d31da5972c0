"""Symbolic reduction of graph equation systems over V*D to kappa-term solutions."""

__version__ = "0.1.0"
