"""Finite loops, neardomains, and sharply 2-transitive permutation groups,
with exhaustively verified translations between the three worlds."""

__version__ = "0.1.0"
