"""Exact verification of stretch factors for multitwist mapping classes."""

__version__ = "0.1.0"
