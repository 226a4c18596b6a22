"""Exact-arithmetic toolkit for a family of arithmetic ball-quotient surfaces."""

__version__ = "1.0.0"
