"""Exact weight systems and a truncated Kontsevich integral for framed tangles.

The package computes Lie-superalgebra weight systems on chord diagrams,
a degree-truncated combinatorial Kontsevich integral for framed tangle
words, and their composites, all over exact scalars.  A verification
harness checks the structural identities (four-term relation, leading
term of the integral, Vassiliev behaviour, cabling, closure slitting)
at small degree.
"""

__version__ = "0.1.0"
