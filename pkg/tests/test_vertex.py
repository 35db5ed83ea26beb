"""Field-operator engine: mode extraction, normalizations, and the diagonal
torus fields."""

from fractions import Fraction

import pytest

from qvertex.fock import FockSpace, FockVector
from qvertex.vertex import VertexOps


@pytest.fixture(scope="module")
def vops(num):
    return VertexOps(FockSpace(2, num))


class TestConfiguration:
    def test_mode_offset_validation(self, num):
        with pytest.raises(ValueError):
            VertexOps(FockSpace(2, num), mode_offset=2)

    def test_minus_norm_values(self, vops):
        f = vops.field
        assert vops.minus_norm(1) == -f.one
        assert vops.minus_norm(2) == -f.rs_pow(Fraction(-1, 2),
                                               Fraction(-1, 2))

    def test_minus_norm_off(self, num):
        raw = VertexOps(FockSpace(2, num), compensate_minus=False)
        assert raw.minus_norm(1) == num.one


class TestModes:
    def test_raising_mode_shifts_lattice(self, vops):
        v = vops.space.vacuum_vector()
        w = vops.mode(1, +1, -1)(v)
        assert not w.is_zero()
        for st in w.terms:
            assert st.point.lam == (1, 0) and st.point.lt in ((1,), (-1,))

    def test_vacuum_killed_by_nonnegative_modes(self, vops):
        v = vops.space.vacuum_vector()
        for k in (0, 1, 2):
            assert vops.mode(1, +1, k)(v).is_zero()
            assert vops.mode(2, +1, k)(v).is_zero()

    def test_mode_linearity(self, vops):
        f = vops.field
        v = vops.space.vacuum_vector()
        op = vops.mode(1, -1, -1)
        c = f.rs_pow(Fraction(1, 2), 0)
        assert op(v.scale(c)) == op(v).scale(c)

    def test_long_mode_no_companion(self, vops):
        v = vops.space.vacuum_vector()
        w = vops.mode(2, +1, -1)(v)
        for st in w.terms:
            assert st.point.lt == (0,)


class TestTorusFields:
    def test_psi_zero_is_omega(self, vops):
        space = vops.space
        v = space.shift((1, 0), (1,), space.vacuum_vector())
        got = vops.psi_mode(1, 0)(v)
        want = space.apply_omega(1, False, v)
        assert got == want

    def test_phi_zero_is_primed_omega(self, vops):
        space = vops.space
        v = space.shift((1, 0), (1,), space.vacuum_vector())
        assert vops.phi_mode(1, 0)(v) == space.apply_omega(1, True, v)

    def test_psi_rejects_negative(self, vops):
        with pytest.raises(ValueError):
            vops.psi_mode(1, -1)

    def test_phi_rejects_positive(self, vops):
        with pytest.raises(ValueError):
            vops.phi_mode(1, 1)

    def test_psi_annihilates_vacuum_positively(self, vops):
        v = vops.space.vacuum_vector()
        assert vops.psi_mode(1, 2)(v).is_zero()
