"""Exact combinatorics of alternation acyclic tournaments."""

__version__ = "0.1.0"
