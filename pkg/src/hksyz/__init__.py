"""Exact computations for polarized fourfolds of K3^[2]-type.

Mukai lattice arithmetic, Hilbert functions, Betti tables, Borel-Weil-Bott
cohomology, Gulliksen-Negard bookkeeping and Schubert/quadric intersection
theory, all in exact integer or rational arithmetic.
"""

__version__ = "0.1.0"
