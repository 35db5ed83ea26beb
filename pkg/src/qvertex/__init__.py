"""Exact construction and verification of a level-one free-field module.

Layers, bottom up:

* :mod:`qvertex.scalars` -- the exact coefficient field in two deformation
  roots p, q (with r = p**8, s = q**8), plus bracket numbers.
* :mod:`qvertex.series` -- truncated formal series and the deformed binomial.
* :mod:`qvertex.cartan` -- root data, structural constants, lattice cocycle.
* :mod:`qvertex.fock` -- the boson Fock space and its basic operators.
* :mod:`qvertex.vertex` -- vertex operators and exact mode extraction.
* :mod:`qvertex.algebra` -- quantum brackets, root vectors, relation suites.
* :mod:`qvertex.cli` -- batch runner emitting JSON verification reports.
"""

from .scalars import SymbolicField, NumericField, Monomial

__all__ = ["SymbolicField", "NumericField", "Monomial"]
