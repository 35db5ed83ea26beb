"""Root data, structural constants, lattice admissibility, and the
sign-twisted cocycle."""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from qvertex.cartan import Cocycle, LatticePoint, RootData, StructConsts
from qvertex.scalars import Monomial

coeff_vecs = st.lists(st.integers(-2, 2), min_size=3, max_size=3).map(tuple)


class TestRootData:
    def test_gram_matrix(self):
        rd = RootData(3)
        # short-short diagonal 1, long diagonal 2, adjacent short -1/2,
        # short-long adjacent -1
        assert rd.pair_root(1, (1, 0, 0)) == 1
        assert rd.pair_root(3, (0, 0, 1)) == 2
        assert rd.pair_root(1, (0, 1, 0)) == Fraction(-1, 2)
        assert rd.pair_root(2, (0, 0, 1)) == -1
        assert rd.pair_root(1, (0, 0, 1)) == 0

    def test_symmetrizers(self):
        rd = RootData(4)
        assert rd.d[1] == Fraction(1, 2) and rd.d[4] == 1
        assert rd.d[0] == 1  # affine node is long

    def test_cartan_integers(self):
        rd = RootData(3)
        for i in range(1, 4):
            assert rd.cartan(i, i) == 2
        assert rd.cartan(2, 3) == -2  # short row against long column
        assert rd.cartan(3, 2) == -1


class TestAdmissibility:
    def test_origin_admissible(self):
        pt = LatticePoint((0, 0, 0), (0, 0))
        assert pt.is_admissible(RootData(3))

    def test_simple_shift_pairs(self):
        rd = RootData(3)
        # a short-root shift must move both labels together
        assert LatticePoint((1, 0, 0), (1, 0)).is_admissible(rd)
        assert not LatticePoint((1, 0, 0), (0, 0)).is_admissible(rd)
        # the long root has no companion component
        assert LatticePoint((0, 0, 1), (0, 0)).is_admissible(rd)


class TestStructConsts:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_pairing_invariant(self, n):
        rep = StructConsts(n).invariant_check()
        assert rep.passed and rep.checks > 0

    def test_displayed_special_entries(self):
        sc = StructConsts(3)
        n = 3
        assert sc.entry(n, 0) == Monomial(1, -8, -8)   # (rs)^-1
        assert sc.entry(0, n) == Monomial(1, 8, 8)     # rs
        assert sc.entry(0, 0) == Monomial(1, 8, -8)    # r s^-1
        assert sc.entry(n, n) == Monomial(1, 8, -8)

    def test_adjacent_short_entries(self):
        sc = StructConsts(4)
        m = sc.entry(1, 2) * sc.entry(2, 1)
        # product invariant at (a1|a2) = -1/2: (r s^-1)^(-1/2)
        assert m == Monomial(1, -4, 4)


class TestCocycle:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_axioms(self, n):
        rep = Cocycle(n).axiom_check(samples=60, seed=5)
        assert rep.passed

    def test_base_table(self):
        co = Cocycle(3)
        assert co.base(1, 1) == Monomial(-1, 2, 2)   # -(r_1 s_1)^(1/2)
        assert co.base(3, 3) == Monomial(-1, 4, 4)   # -(rs)^(1/2) long
        assert co.base(1, 2) == Monomial(1)
        assert co.base(2, 1) == Monomial(-1, -2, -2)

    @settings(max_examples=30, deadline=None,
              suppress_health_check=list(HealthCheck))
    @given(coeff_vecs, coeff_vecs, coeff_vecs)
    def test_second_argument_multiplicative(self, a, lam, mu):
        co = Cocycle(3)
        lhs = co.value(a, tuple(x + y for x, y in zip(lam, mu)))
        rhs = co.value(a, lam) * co.value(a, mu)
        assert lhs.coeff == rhs.coeff and lhs.ep == rhs.ep \
            and lhs.eq == rhs.eq
