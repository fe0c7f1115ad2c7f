"""Parameterized codes of graphs over finite fields and their vanishing ideals."""

__version__ = "0.1.0"
