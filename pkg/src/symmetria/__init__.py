"""Symmetry statistics on lattice paths, partitions and bargraphs.

Exact enumeration, bijections, generating functions and limit-law checks.
"""

__version__ = "0.1.0"
