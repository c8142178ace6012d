"""Sahlqvist correspondence for LTL: classification, first-order
correspondents and a brute-force frame oracle."""

__version__ = "0.1.0"
