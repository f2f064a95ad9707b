"""Exact cycle index sums for the homology of non-k-equal configuration spaces."""

__version__ = "0.1.0"
