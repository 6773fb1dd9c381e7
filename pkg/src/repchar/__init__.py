"""repchar: exact cyclic, symmetric and representation homology of group
algebras, with the crossed simplicial combinatorics underneath."""

__version__ = "0.1.0"
