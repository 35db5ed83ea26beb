"""Module-level operator actions: oscillator contractions, lattice shifts,
torus eigenvalues, and the diagonal sign operator."""

from fractions import Fraction

import pytest

from qvertex.fock import BosonMode, FockBasisState, FockSpace, FockVector


@pytest.fixture(scope="module")
def space(num):
    return FockSpace(2, num)


def vac(space):
    return space.vacuum_vector()


class TestBosons:
    def test_annihilate_vacuum(self, space):
        assert space.apply_boson(BosonMode("a", 1, 3), vac(space)).is_zero()

    def test_creation_then_annihilation(self, space):
        v = space.apply_boson(BosonMode("a", 1, -2), vac(space))
        w = space.apply_boson(BosonMode("a", 1, 2), v)
        assert w == vac(space).scale(space.contraction(1, 1, 2))

    def test_mismatched_degree_commutes(self, space):
        v = space.apply_boson(BosonMode("a", 1, -2), vac(space))
        assert space.apply_boson(BosonMode("a", 1, 3), v).is_zero()

    def test_cross_family_contraction_vanishes(self, space):
        v = space.apply_boson(BosonMode("b", 1, -2), vac(space))
        assert space.apply_boson(BosonMode("a", 1, 2), v).is_zero()

    def test_multiplicity(self, space):
        v = vac(space)
        for _ in range(3):
            v = space.apply_boson(BosonMode("a", 2, -1), v)
        w = space.apply_boson(BosonMode("a", 2, 1), v)
        (st, c), = w.terms.items()
        assert st.creators == (("a", 2, -1), ("a", 2, -1))
        assert c == 3 * space.contraction(2, 2, 1)

    def test_invalid_modes(self):
        with pytest.raises(ValueError):
            BosonMode("a", 1, 0)
        with pytest.raises(ValueError):
            BosonMode("c", 1, -1)


class TestLattice:
    def test_admissible_shift(self, space):
        v = space.shift((1, 0), (1,), vac(space))
        (st, _), = v.terms.items()
        assert st.point.lam == (1, 0) and st.point.lt == (1,)

    def test_inadmissible_shift_rejected(self, num):
        sp = FockSpace(3, num)
        # a bare short-root shift leaves a half-integral mode exponent
        with pytest.raises(ValueError):
            sp.shift((0, 1, 0), (0, 0), sp.vacuum_vector())

    def test_unenforced_partial_shift(self, space):
        v = space.shift((1, 0), (0,), vac(space), enforce=False)
        w = space.shift((0, 0), (1,), v, enforce=False)
        (st, _), = w.terms.items()
        assert st.point.is_admissible(space.roots)

    def test_zero_mode_eigenvalues(self, space):
        v = space.shift((1, 0), (1,), vac(space))
        (state, _), = v.terms.items()
        assert space.zero_mode(1, "a", state) == 1
        assert space.zero_mode(2, "a", state) == -1


class TestDiagonals:
    def test_sign_operator(self, num):
        sp = FockSpace(3, num)
        v = sp.shift((0, 1, 0), (0, 1), sp.vacuum_vector())
        (state, _), = v.terms.items()
        # doubled pairing 2(a1|a2) = -1 is odd
        assert sp.sign_eigen(1, state) == -1
        assert sp.sign_eigen(2, state) == 1

    def test_omega_inverse_pair(self, space):
        v = space.shift((1, 0), (1,), vac(space))
        (state, _), = v.terms.items()
        m = space.omega_eigen(1, False, state)
        minv = space.omega_eigen(1, False, state).pow(-1)
        prod = m * minv
        assert (prod.coeff, prod.ep, prod.eq) == (1, 0, 0)

    def test_weighted_degree(self, space):
        st = FockBasisState(
            (BosonMode("a", 1, -2), BosonMode("b", 1, -1)),
            FockBasisState.vacuum(2).point)
        assert space.weighted_degree(st) == Fraction(3, 2)


class TestVectors:
    def test_linear_algebra(self, space):
        f = space.field
        v = vac(space)
        assert (v + v).scale(f.rational(Fraction(1, 2))) == v
        assert (v - v).is_zero()
        assert v.scale(f.zero).is_zero()
