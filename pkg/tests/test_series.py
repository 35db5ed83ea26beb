"""Truncated series algebra and the deformed-binomial identity family."""

from fractions import Fraction

import pytest

from qvertex.scalars import Monomial
from qvertex.series import (Poly3, TruncatedSeries, check_deformed_binomial_family,
                            check_symmetrizer_kernel, deformed_binomial,
                            exp_series, geometric, linear)


class TestTruncatedSeries:
    def test_exp_of_zero(self, sym):
        z = TruncatedSeries(sym, {}, 8)
        assert exp_series(z) == TruncatedSeries.one(sym, 8)

    def test_exp_additivity(self, sym):
        a = TruncatedSeries(sym, {1: sym.rs_pow(Fraction(1, 2), 0)}, 8)
        b = TruncatedSeries(sym, {2: -sym.one}, 8)
        assert exp_series(a) * exp_series(b) == exp_series(a + b)

    def test_geometric_times_linear(self, sym):
        c = Monomial(1, 0, 4)
        assert geometric(sym, c, 10) * linear(sym, c, 10) \
            == TruncatedSeries.one(sym, 10)

    def test_deformed_binomial_closed_forms(self, sym):
        c = Monomial(1, 2, 2)
        assert deformed_binomial(sym, c, 1, 10) == linear(sym, c, 10)
        # at exponent -1 the series is geometric in (rs)^-1 c
        assert deformed_binomial(sym, c, -1, 10) \
            == geometric(sym, c.pow(1) * Monomial(1, -8, -8), 10)


class TestIdentityFamily:
    def test_family_symbolic(self, sym):
        results = check_deformed_binomial_family(sym, 10)
        assert results and all(results.values())

    def test_family_numeric(self, num):
        results = check_deformed_binomial_family(num, 12)
        assert results and all(results.values())


class TestSymmetrizerKernel:
    def test_fixed_points_symbolic(self, sym):
        for t in (sym.rs_pow(Fraction(-1, 2), Fraction(1, 2)),
                  sym.rs_pow(Fraction(1, 4), Fraction(1, 4)),
                  sym.rs_pow(Fraction(1, 2), 0)):
            assert check_symmetrizer_kernel(sym, t)

    def test_random_rational_points(self, num):
        import random
        rng = random.Random(11)
        for _ in range(10):
            t = num.rational(Fraction(rng.randint(1, 30),
                                      rng.randint(1, 30)))
            assert check_symmetrizer_kernel(num, t)

    def test_zero_rejected(self, sym):
        with pytest.raises(Exception):
            check_symmetrizer_kernel(sym, sym.zero)


class TestPoly3:
    def test_commutative_product(self, sym):
        x = Poly3.var(sym, 0)
        y = Poly3.var(sym, 1, sym.rs_pow(Fraction(1, 2), 0))
        assert x * y == y * x
        assert (x + y) * (x - y) == x * x - y * y
