"""Numerical toolkit for the duality between actions on noncompact
symmetric spaces and their compact duals."""

__version__ = "0.1.0"
