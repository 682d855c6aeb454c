"""Exact symmetric-function operator calculus over Q(q,t)."""

__version__ = "0.1.0"
