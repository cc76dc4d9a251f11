"""Exact verification toolkit for 2-blocks with elementary abelian defect group of order 8."""

__version__ = "0.1.0"
