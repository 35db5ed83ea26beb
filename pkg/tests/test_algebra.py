"""Operator-expression calculus, test-state generation, and the suite
runner plumbing."""

from fractions import Fraction

import pytest

from qvertex.algebra import (BracketOp, ComposeOp, ModeOperator, ScaledOp,
                             SuiteRunner, SumOp, boson_mode_op,
                             build_root_vectors, field_mode,
                             generate_test_states, nested_bracket, qbracket,
                             theta_coeffs)
from qvertex.fock import FockSpace, FockVector
from qvertex.vertex import VertexOps


@pytest.fixture(scope="module")
def runner(num):
    return SuiteRunner(2, num, max_degree=Fraction(1, 2), max_shifts=1,
                       mode_window=(-1, 0), seed=3)


class TestStateGeneration:
    def test_deterministic(self, num):
        sp = FockSpace(2, num)
        a = generate_test_states(sp, Fraction(1), 1)
        b = generate_test_states(sp, Fraction(1), 1)
        assert a == b and len(a) > 1

    def test_all_admissible(self, num):
        sp = FockSpace(3, num)
        for st in generate_test_states(sp, Fraction(1, 2), 1):
            assert st.point.is_admissible(sp.roots)
            assert sp.weighted_degree(st) <= Fraction(1, 2)

    def test_origin_sector(self, num):
        sp = FockSpace(2, num)
        for st in generate_test_states(sp, Fraction(1), 1, sector="origin"):
            assert st.point.lam == (0, 0)

    def test_shifts_bound(self, num):
        sp = FockSpace(2, num)
        zero_shift = generate_test_states(sp, Fraction(0), 0)
        assert len(zero_shift) == 1  # vacuum only


class TestBracketCalculus:
    def test_twisted_bracket_definition(self, runner):
        f = runner.field
        a = field_mode(runner.vops, 1, +1, 0)
        b = field_mode(runner.vops, 1, -1, 0)
        t = f.rs_pow(Fraction(1, 2), 0)
        br = BracketOp(a, b, t)
        v = runner.space.vacuum_vector()
        lhs = br.apply(v)
        rhs = a.apply(b.apply(v)) - b.apply(a.apply(v)).scale(t)
        assert lhs == rhs

    def test_nested_round_vs_manual(self, runner):
        f = runner.field
        ops = [boson_mode_op(runner.vops, 1, k) for k in (-1, -2, 1)]
        t1, t2 = f.rs_pow(Fraction(1, 2), 0), f.rs_pow(0, Fraction(1, 2))
        nested = nested_bracket(ops, (t1, t2), convention="round")
        manual = BracketOp(ops[0], BracketOp(ops[1], ops[2], t1), t2)
        v = runner.space.vacuum_vector()
        assert nested.apply(v) == manual.apply(v)

    def test_nested_arity_error(self, runner):
        ops = [boson_mode_op(runner.vops, 1, -1)] * 3
        with pytest.raises(ValueError):
            nested_bracket(ops, (runner.field.one,), convention="round")

    def test_qbracket_alias(self, runner):
        a = boson_mode_op(runner.vops, 1, -1)
        b = boson_mode_op(runner.vops, 1, 1)
        v = runner.space.vacuum_vector()
        assert qbracket(a, b, 1).apply(v) == BracketOp(
            a, b, runner.field.one).apply(v)

    def test_operator_sum_and_scale(self, runner):
        f = runner.field
        a = boson_mode_op(runner.vops, 1, -1)
        v = runner.space.vacuum_vector()
        two_a = SumOp([a, a])
        assert two_a.apply(v) == ScaledOp(f.rational(2), a).apply(v)


class TestRootVectors:
    def test_theta_coefficients(self):
        assert theta_coeffs(2) == (2, 1)
        assert theta_coeffs(4) == (2, 2, 2, 1)

    def test_column_vectors_nonzero(self, num):
        vops = VertexOps(FockSpace(3, num))
        rv = build_root_vectors(vops)
        states = generate_test_states(vops.space, Fraction(1), 1)
        for key in (("alpha_minus", 2), ("beta_minus", 2), "theta_minus"):
            op = rv[key]
            assert any(not op.apply(FockVector.basis(vops.field, st))
                       .is_zero() for st in states)

    def test_theta_plus_lowers_from_theta_sector(self, num):
        vops = VertexOps(FockSpace(2, num))
        rv = build_root_vectors(vops)
        w = rv["theta_plus"].apply(vops.space.vacuum_vector())
        for st in w.terms:
            assert st.point.lam == (2, 1)


class TestSuiteRunner:
    def test_unknown_suite(self, runner):
        with pytest.raises(KeyError):
            runner.check_suite("no-such-suite")

    def test_suite_ids_all_dispatch(self, runner):
        # light suites only; heavyweight ones are covered by acceptance
        for name in ("series", "cocycle", "structural"):
            rep = runner.check_suite(name)
            assert rep.passed, rep.witness

    def test_conventions_block(self, runner):
        conv = runner.conventions()
        assert conv["mode_exponent"].endswith("offset=0")
        assert conv["f0_variant"] in ("auto", "proof", "display")

    def test_report_shape(self, runner):
        rep = runner.check_suite("structural")
        d = rep.as_dict()
        assert set(d) == {"identity", "window", "passed", "checks",
                          "witness"}
        assert d["checks"] > 0 and d["witness"] == ""
