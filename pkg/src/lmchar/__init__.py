"""Exact S_2 x S_n-equivariant Poincare-Serre polynomials of Losev-Manin spaces."""
from .losev_manin import (
    equivariant_poincare,
    equivariant_poincare_series,
    eulerian_polynomial,
    f,
    forget_s2,
    g,
    poincare_polynomial,
    procesi,
)
from .partitions import enumerate_partitions
from .poly import Q, RationalPoly
from .symfunc import BiSymFunc, SymFunc, bi_to_schur, schur, to_schur

__version__ = "0.1.0"
