from fractions import Fraction

import pytest

from qvertex.scalars import NumericField, SymbolicField

GENERIC_POINTS = ((Fraction(3, 2), Fraction(5, 7)),
                  (Fraction(7, 4), Fraction(2, 9)))


@pytest.fixture(scope="session")
def sym():
    return SymbolicField()


@pytest.fixture(scope="session")
def num():
    return NumericField(*GENERIC_POINTS[0])
