"""Exact Dedekind cotangent sums and machine-checked reciprocity identities."""

__version__ = "0.1.0"
