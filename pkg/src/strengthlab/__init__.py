"""Exact computation of strength, Jacobian minor ideals and complete-intersection data."""

__version__ = "0.1.0"
