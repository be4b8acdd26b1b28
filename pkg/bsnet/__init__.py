"""Certified families of internally disjoint T-paths in bubble-sort star graphs."""

__version__ = "1.0.0"
