"""Exact p-adic / finite-field hypergeometric toolkit and verification harness."""

__version__ = "0.1.0"
