"""Decide, construct and verify inverse ambiguous functions, f(f(x)) = x^-1."""

__version__ = "0.1.0"
