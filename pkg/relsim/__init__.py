# relsim/__init__.py
"""Exact verification of group-invariant simultaneity relations."""
__version__ = "1.0.0"
