"""Twisted-commutator calculus over field operators, the nested root-vector
constructors, the affine generator images, and the relation-verification
suites.

Operators are immutable expression trees evaluated against FockVectors; a
twisted bracket node ``[A, B]_v`` evaluates to ``A∘B − v·B∘A``.  Every suite
applies both sides of an identity to a deterministic family of test states
and compares exact vectors, aggregating into a RelationReport.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .cartan import LatticePoint
from .fock import BosonMode, FockSpace, FockVector
from .report import RelationReport
from .scalars import Monomial
from .series import check_deformed_binomial_family, check_symmetrizer_kernel
from .vertex import VertexOps

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# operator expressions

class OperatorExpr:
    """Immutable linear-operator expression on FockVectors."""

    label = "?"

    def apply(self, v):
        raise NotImplementedError

    def __call__(self, v):
        return self.apply(v)

    def __mul__(self, other):
        """Operator composition (self after other)."""
        return ComposeOp(self, other)

    def __add__(self, other):
        return SumOp((self, other))

    def __sub__(self, other):
        return SumOp((self, ScaledOp(-1, other)))

    def scaled(self, c):
        return ScaledOp(c, self)


class ModeOperator(OperatorExpr):
    """A primitive operator wrapping a concrete linear map."""

    def __init__(self, fn, label):
        self.fn = fn
        self.label = label

    def apply(self, v):
        return self.fn(v)


class ScaledOp(OperatorExpr):
    def __init__(self, c, inner):
        self.c = c
        self.inner = inner
        self.label = "(%r)*%s" % (c, inner.label)

    def apply(self, v):
        out = self.inner.apply(v)
        return out.scale(out.field.rational(self.c)
                         if isinstance(self.c, (int, Fraction)) else self.c)


class SumOp(OperatorExpr):
    def __init__(self, parts):
        self.parts = tuple(parts)
        self.label = " + ".join(p.label for p in self.parts)

    def apply(self, v):
        out = FockVector.zero(v.field)
        for p in self.parts:
            out = out + p.apply(v)
        return out


class ComposeOp(OperatorExpr):
    def __init__(self, outer, inner):
        self.outer = outer
        self.inner = inner
        self.label = "%s %s" % (outer.label, inner.label)

    def apply(self, v):
        return self.outer.apply(self.inner.apply(v))


class BracketOp(OperatorExpr):
    """Twisted commutator [A, B]_v = A B − v B A."""

    def __init__(self, a, b, twist):
        self.a = a
        self.b = b
        self.twist = twist
        self.label = "[%s, %s]_(%r)" % (a.label, b.label, twist)

    def apply(self, v):
        ab = self.a.apply(self.b.apply(v))
        ba = self.b.apply(self.a.apply(v))
        t = self.twist
        if isinstance(t, (int, Fraction)):
            t = v.field.rational(t)
        elif isinstance(t, Monomial):
            t = v.field.monomial(t)
        return ab - ba.scale(t)


def qbracket(a, b, twist):
    """Twisted commutator node."""
    return BracketOp(a, b, twist)


def nested_bracket(ops, twists, convention="round"):
    """Iterated twisted bracket of a list of operators.

    ``round``: the first twist is innermost and nests from the right —
    [a_1, …, a_s] = [a_1, [a_2, …, [a_{s-1}, a_s]_{v_1} …]]_{v_{s-1}}.
    ``angle``: the first twist is innermost and nests from the left —
    [[a_1, a_2]_{v_1}, a_3]_{v_2} ….
    """
    ops = list(ops)
    twists = list(twists)
    if not ops:
        raise ValueError("empty operator list")
    if len(twists) != len(ops) - 1:
        raise ValueError("twist count must be operator count - 1")
    if convention == "round":
        expr = ops[-1]
        for pos, v in enumerate(twists):
            expr = BracketOp(ops[len(ops) - 2 - pos], expr, v)
        return expr
    if convention == "angle":
        expr = ops[0]
        for op, v in zip(ops[1:], twists):
            expr = BracketOp(expr, op, v)
        return expr
    raise ValueError("unknown nesting convention %r" % (convention,))


# ---------------------------------------------------------------------------
# concrete operator factories

def field_mode(vops, i, sgn, k):
    return ModeOperator(vops.mode(i, sgn, k),
                        "x%d%s(%d)" % (i, "+" if sgn > 0 else "-", k))


def boson_mode_op(vops, i, ell):
    space = vops.space
    mode = BosonMode("a", i, ell)
    return ModeOperator(lambda v: space.apply_boson(mode, v),
                        "a%d(%d)" % (i, ell))


def torus_op(vops, exps, primed, extra=None, label=""):
    """Diagonal operator prod_i omega_i^{e_i} (primed family when asked),
    optionally multiplied by a fixed monomial ``extra``."""
    space, field = vops.space, vops.field

    def fn(v):
        out = {}
        for st, c in v.terms.items():
            m = Monomial(1) if extra is None else extra
            for i, e in exps:
                if e:
                    m = m * space.omega_eigen(i, primed, st).pow(e)
            out[st] = c * field.monomial(m)
        return FockVector(field, out)

    return ModeOperator(fn, label or ("w'" if primed else "w"))


def build_root_vectors(vops):
    """The nested lowering/raising vectors attached to the column of roots
    alpha_{1,i} = alpha_1 + … + alpha_i and beta_{1,i} = alpha_{1,i-1} +
    alpha_{i,n} + … (the long-root column), ending at the highest root.

    Lowering vectors carry total mode 1 and nest from the right; raising
    vectors carry total mode −1 and mirror the nesting from the left.
    """
    n = vops.space.n
    s_half = Monomial(1, 0, 4)
    r_half = Monomial(1, 4, 0)
    s_one = Monomial(1, 0, 8)
    r_one = Monomial(1, 8, 0)
    rs_mhalf = Monomial(1, -4, -4)
    r_mhalf = Monomial(1, -4, 0)
    s_mhalf = Monomial(1, 0, -4)

    out = {}
    am = {1: field_mode(vops, 1, -1, 1)}
    for i in range(2, n):
        am[i] = BracketOp(field_mode(vops, i, -1, 0), am[i - 1], s_half)
    am[n] = BracketOp(field_mode(vops, n, -1, 0), am[n - 1], s_one)
    bm = {n: am[n]}
    for i in range(n - 1, 1, -1):
        bm[i] = BracketOp(field_mode(vops, i, -1, 0), bm[i + 1], r_mhalf)
    theta_m = BracketOp(field_mode(vops, 1, -1, 0), bm[2], rs_mhalf)

    ap = {1: field_mode(vops, 1, +1, -1)}
    for i in range(2, n):
        ap[i] = BracketOp(ap[i - 1], field_mode(vops, i, +1, 0), r_half)
    ap[n] = BracketOp(ap[n - 1], field_mode(vops, n, +1, 0), r_one)
    bp = {n: ap[n]}
    for i in range(n - 1, 1, -1):
        bp[i] = BracketOp(bp[i + 1], field_mode(vops, i, +1, 0), s_mhalf)
    theta_p = BracketOp(bp[2], field_mode(vops, 1, +1, 0), rs_mhalf)

    for i, e in am.items():
        out[("alpha_minus", i)] = e
    for i, e in bm.items():
        out[("beta_minus", i)] = e
    out["theta_minus"] = theta_m
    for i, e in ap.items():
        out[("alpha_plus", i)] = e
    for i, e in bp.items():
        out[("beta_plus", i)] = e
    out["theta_plus"] = theta_p
    return out


def theta_coeffs(n):
    """Simple-root coefficients of the highest root: (2, …, 2, 1)."""
    return tuple(2 if i < n - 1 else 1 for i in range(n))


def build_E0_F0(vops, variant="proof"):
    """Images of the affine Chevalley pair attached to index 0.

    E0 = a_E · X_theta^-(1) ∘ omega0 with omega0 = s^{-1} w_theta^{-1};
    F0 = a_F · omega0' ∘ X_theta^+(-1), where the central scalar inside
    omega0' is chosen by ``variant``: ``display`` uses s^{-1}, ``proof``
    uses r^{-1} (the two candidate normalizations found in the source; the
    diagonal-commutator suite decides between them — ``display`` cannot
    hold, its right side vanishes on sectors where the commutator does
    not).

    The product of the two constants is pinned by the diagonal commutator
    [E0, F0] = (omega0 - omega0')/(r - s): machine measurement (ranks 2 and
    3) gives a_E·a_F = (rs)^{n/2} / (r^{1/2}+s^{1/2})^2.  F0 keeps the
    displayed constant a = (rs)^{(n-2)/2} (r^{1/2}+s^{1/2})^{-1}; E0
    carries the corrective cofactor, expressed against the *uncompensated*
    lowering fields so the choice of the lowering-field normalization
    switch does not change E0.  Returns (E0, F0, omega0, omega0_primed).
    """
    n = vops.space.n
    field = vops.field
    cth = theta_coeffs(n)
    two1 = field.rs_pow(HALF, 0) + field.rs_pow(0, HALF)
    a_f = field.rs_pow(Fraction(n - 2, 2), Fraction(n - 2, 2)) / two1
    # net lowering-field rescale inside the nested theta vector: the short
    # letters appear twice each, the long letter once
    prod_norm = vops.minus_norm(n)
    # a_E for literal fields is -(rs)^{1/2}/[2]_1; divide out the rescale
    # already baked into the nested expression
    a_e = -field.rs_pow(HALF, HALF) / two1 / prod_norm
    rv = build_root_vectors(vops)
    exps = tuple((i + 1, -c) for i, c in enumerate(cth))
    omega0 = torus_op(vops, exps, False, Monomial(1, 0, -8),
                      "s^-1 w_th^-1")
    if variant == "display":
        extra_p = Monomial(1, 0, -8)
    elif variant == "proof":
        extra_p = Monomial(1, -8, 0)
    else:
        raise ValueError("unknown variant %r" % (variant,))
    omega0p = torus_op(vops, exps, True, extra_p, "w'_0")
    e0 = ScaledOp(a_e, ComposeOp(rv["theta_minus"], omega0))
    f0 = ScaledOp(a_f, ComposeOp(omega0p, rv["theta_plus"]))
    return e0, f0, omega0, omega0p


# ---------------------------------------------------------------------------
# test states

def generate_test_states(space, max_degree, max_shifts, sector="all"):
    """All admissible basis states of weighted boson degree <= max_degree
    over lattice points reachable from the origin by at most ``max_shifts``
    joint label translations of the field operators; deterministic order.
    ``sector="origin"`` restricts to the untranslated label."""
    n = space.n
    roots = space.roots
    origin = LatticePoint((0,) * n, (0,) * (n - 1))
    points = {origin: 0}
    frontier = [origin]
    shifts = []
    for i in range(1, n):
        ai = tuple(1 if k == i - 1 else 0 for k in range(n))
        at = tuple(1 if k == i - 1 else 0 for k in range(n - 1))
        for sa in (1, -1):
            for sb in (1, -1):
                shifts.append((tuple(sa * x for x in ai),
                               tuple(sb * x for x in at)))
    an = tuple(1 if k == n - 1 else 0 for k in range(n))
    for sa in (1, -1):
        shifts.append((tuple(sa * x for x in an), (0,) * (n - 1)))

    for _ in range(max_shifts):
        nxt = []
        for pt in frontier:
            for da, dt in shifts:
                lam = tuple(x + y for x, y in zip(pt.lam, da))
                lt = tuple(x + y for x, y in zip(pt.lt, dt))
                new = LatticePoint(lam, lt)
                if new in points or not new.is_admissible(roots):
                    continue
                points[new] = points[pt] + 1
                nxt.append(new)
        frontier = nxt
    if sector == "origin":
        point_list = [origin]
    else:
        point_list = sorted(points, key=lambda p: (points[p], p.lam, p.lt))

    # boson dressings of weighted degree <= max_degree
    max_degree = Fraction(max_degree)
    modes = []
    for i in range(1, n + 1):
        w = roots.d[i]
        k = 1
        while w * k <= max_degree:
            modes.append((("a", i, -k), w * k))
            k += 1
    for j in range(1, n):
        k = 1
        while HALF * k <= max_degree:
            modes.append((("b", j, -k), HALF * k))
            k += 1
    modes.sort()

    dressings = []

    def rec(pos, budget, acc):
        dressings.append(tuple(acc))
        for idx in range(pos, len(modes)):
            key, w = modes[idx]
            if w <= budget:
                acc.append(key)
                rec(idx, budget - w, acc)
                acc.pop()

    rec(0, max_degree, [])
    dressings.sort()

    from .fock import FockBasisState
    out = []
    for pt in point_list:
        for dress in dressings:
            out.append(FockBasisState(
                tuple(BosonMode(*k) for k in dress), pt))
    return out


# ---------------------------------------------------------------------------
# suite runner

class SuiteRunner:
    """Configured verification engine: builds the module once and exposes
    one entry point per relation family."""

    SUITES = (
        "series",
        "symmetrizer",
        "cocycle",
        "structural",
        "heisenberg",
        "torus-conjugation",
        "boson-current",
        "same-sign-locality",
        "raising-lowering",
        "serre",
        "bracket-calculus",
        "root-vectors",
        "affine-images",
    )

    def __init__(self, n, field, max_degree=1, max_shifts=1,
                 mode_window=(-1, 1), seed=0, series_order=16,
                 f0_variant="auto", max_states=None):
        self.n = n
        self.field = field
        self.space = FockSpace(n, field)
        self.vops = VertexOps(self.space)
        self.max_degree = Fraction(max_degree)
        self.max_shifts = max_shifts
        self.mode_window = mode_window
        self.seed = seed
        self.series_order = series_order
        self.f0_variant = f0_variant
        self.f0_resolved = None
        self.max_states = max_states
        self._states = {}

    # -- helpers ------------------------------------------------------
    def rs(self, er, es):
        return self.field.rs_pow(er, es)

    def states(self, max_degree=None, max_shifts=None, sector="all"):
        key = (max_degree, max_shifts, sector)
        got = self._states.get(key)
        if got is None:
            got = generate_test_states(
                self.space,
                self.max_degree if max_degree is None else max_degree,
                self.max_shifts if max_shifts is None else max_shifts,
                sector)
            if self.max_states is not None and len(got) > self.max_states:
                rng = random.Random(self.seed)
                idx = sorted(rng.sample(range(len(got)), self.max_states))
                got = [got[i] for i in idx]
            self._states[key] = got
        return got

    def modes_range(self):
        lo, hi = self.mode_window
        return range(lo, hi + 1)

    def window(self, **extra):
        out = {
            "rank": self.n,
            "max_degree": str(self.max_degree),
            "max_shifts": self.max_shifts,
            "mode_window": list(self.mode_window),
            "seed": self.seed,
        }
        out.update(extra)
        return out

    def conventions(self):
        """Resolved convention switches, echoed into reports."""
        return {
            "mode_exponent": "z^(-k-1+offset), offset=%d"
                             % self.vops.mode_offset,
            "sign_operator_placement":
                "pre-shift" if self.vops.sign_before_shift else "post-shift",
            "lowering_normalization":
                "1/kappa_i compensation %s"
                % ("on" if self.vops.compensate_minus else "off"),
            "f0_variant": self.f0_resolved or self.f0_variant,
        }

    def _check_on_states(self, rep, name, lhs, rhs, states):
        """Apply two operator expressions to every state and compare."""
        for st in states:
            v = FockVector.basis(self.field, st)
            got = lhs.apply(v)
            want = rhs.apply(v) if rhs is not None else FockVector.zero(
                self.field)
            rep.record(got == want,
                       lambda name=name, st=st, got=got, want=want:
                       "%s on %s: %r != %r" % (name, st.render(),
                                               got, want))

    def check_suite(self, name):
        method = {
            "series": self.suite_series,
            "symmetrizer": self.suite_symmetrizer,
            "cocycle": self.suite_cocycle,
            "structural": self.suite_structural,
            "heisenberg": self.suite_heisenberg,
            "torus-conjugation": self.suite_torus,
            "boson-current": self.suite_boson_current,
            "same-sign-locality": self.suite_locality,
            "raising-lowering": self.suite_raising_lowering,
            "serre": self.suite_serre,
            "bracket-calculus": self.suite_bracket_calculus,
            "root-vectors": self.suite_root_vectors,
            "affine-images": self.suite_affine_images,
        }.get(name)
        if method is None:
            raise KeyError("unknown suite id %r" % (name,))
        return method()

    # -- scalar/series suites -----------------------------------------
    def suite_series(self):
        rep = RelationReport("series", self.window(order=self.series_order))
        results = check_deformed_binomial_family(self.field,
                                                 self.series_order)
        for key, ok in sorted(results.items()):
            rep.record(ok, lambda key=key: "series identity %s failed" % key)
        return rep

    def suite_symmetrizer(self):
        rep = RelationReport("symmetrizer", self.window(random_points=20))
        field = self.field
        fixed = (field.rs_pow(Fraction(-1, 2), Fraction(1, 2)),
                 field.rs_pow(Fraction(1, 4), Fraction(1, 4)),
                 field.rs_pow(Fraction(1, 2), 0))
        for t in fixed:
            rep.record(check_symmetrizer_kernel(field, t),
                       lambda t=t: "kernel identity failed at t=%r" % (t,))
        rng = random.Random(self.seed)
        for _ in range(20):
            t = field.rational(Fraction(rng.randint(1, 50),
                                        rng.randint(1, 50)))
            rep.record(check_symmetrizer_kernel(field, t),
                       lambda t=t: "kernel identity failed at t=%r" % (t,))
        return rep

    def suite_cocycle(self):
        rep = self.space.cocycle.axiom_check(samples=200, seed=self.seed)
        rep.window.update(self.window())
        rep.identity = "cocycle"
        return rep

    def suite_structural(self):
        rep = self.space.consts.invariant_check()
        rep.window.update(self.window())
        rep.identity = "structural"
        return rep

    # -- operator suites ----------------------------------------------
    def suite_heisenberg(self):
        """Commutator of two oscillator modes acts by the closed scalar."""
        rep = RelationReport("heisenberg", self.window(ell_max=3))
        field = self.field
        states = self.states()
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                a = self.space.roots.bform(i, j)
                for ell in (-3, -2, -1, 1, 2, 3):
                    for ellp in (-3, -2, -1, 1, 2, 3):
                        A = boson_mode_op(self.vops, i, ell)
                        B = boson_mode_op(self.vops, j, ellp)
                        comm = BracketOp(A, B, field.one)
                        if ell + ellp == 0:
                            la = abs(ell)
                            c = (self.rs(Fraction(la - ell * a, 2),
                                         Fraction(la - ell * a, 2))
                                 * field.qnum(ell * a) * field.qnum(la)
                                 / field.rational(la))
                            rhs = ModeOperator(lambda v, c=c: v.scale(c),
                                               "scalar")
                        else:
                            rhs = None
                        self._check_on_states(
                            rep, "[a%d(%d), a%d(%d)]" % (i, ell, j, ellp),
                            comm, rhs, states)
        return rep

    def _omega_conj(self, i, primed, inner):
        """w_i ∘ inner ∘ w_i^{-1} (or the primed family)."""
        pre = torus_op(self.vops, ((i, -1),), primed)
        post = torus_op(self.vops, ((i, 1),), primed)
        return ComposeOp(post, ComposeOp(inner, pre))

    def suite_torus(self):
        """Diagonal conjugation of field modes picks up the pairing."""
        rep = RelationReport("torus-conjugation", self.window())
        field = self.field
        states = self.states()
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                for sgn in (+1, -1):
                    for k in self.modes_range():
                        x = field_mode(self.vops, j, sgn, k)
                        lhs = self._omega_conj(i, False, x)
                        cw = field.monomial(
                            self.space.consts.entry(j, i).pow(sgn))
                        rhs = ScaledOp(cw, x)
                        self._check_on_states(
                            rep, "w%d x%d^%+d(%d) w%d^-1" % (i, j, sgn, k, i),
                            lhs, rhs, states)
                        lhsp = self._omega_conj(i, True, x)
                        cwp = field.monomial(
                            self.space.consts.entry(i, j).pow(-sgn))
                        rhsp = ScaledOp(cwp, x)
                        self._check_on_states(
                            rep, "w'%d x%d^%+d(%d) w'%d^-1"
                            % (i, j, sgn, k, i), lhsp, rhsp, states)
        return rep

    def suite_boson_current(self):
        """Oscillator modes act on field modes as shift operators."""
        rep = RelationReport("boson-current", self.window(ell_set=[1, 2]))
        field = self.field
        states = self.states()
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                a = self.space.roots.bform(i, j)
                for ell in (1, 2, -1, -2):
                    for sgn in (+1, -1):
                        for k in self.modes_range():
                            A = boson_mode_op(self.vops, i, ell)
                            X = field_mode(self.vops, j, sgn, k)
                            comm = BracketOp(A, X, field.one)
                            if ell > 0:
                                c = (self.rs(Fraction(ell * (1 - a), 2),
                                             Fraction(ell * (1 - a), 2))
                                     * field.qnum(ell * a)
                                     / field.rational(ell)
                                     * self.rs(0, Fraction(sgn * ell, 2)))
                            else:
                                c = (self.rs(Fraction(-ell * (1 + a), 2),
                                             Fraction(-ell * (1 + a), 2))
                                     * field.qnum(ell * a)
                                     / field.rational(ell)
                                     * self.rs(Fraction(sgn * ell, 2), 0))
                            c = c * field.rational(sgn)
                            rhs = ScaledOp(
                                c, field_mode(self.vops, j, sgn, ell + k))
                            self._check_on_states(
                                rep, "[a%d(%d), x%d^%+d(%d)]"
                                % (i, ell, j, sgn, k), comm, rhs, states)
        return rep

    def suite_locality(self):
        """Same-sign relations: orthogonal pairs commute; coupled pairs
        satisfy the twisted exchange identity; self pairs annihilate the
        adjacent-mode bracket."""
        rep = RelationReport("same-sign-locality", self.window())
        field = self.field
        states = self.states()
        consts = self.space.consts
        ks = [k for k in self.modes_range()]
        for i in range(1, self.n + 1):
            for sgn in (+1, -1):
                cii = field.monomial(consts.entry(i, i).pow(-sgn))
                for k in ks:
                    A = field_mode(self.vops, i, sgn, k)
                    B = field_mode(self.vops, i, sgn, k + 1)
                    self._check_on_states(
                        rep, "adjacent-mode self bracket i=%d sgn=%+d k=%d"
                        % (i, sgn, k), BracketOp(A, B, cii), None, states)
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if i == j:
                    continue
                a = self.space.roots.bform(i, j)
                for sgn in (+1, -1):
                    if a == 0:
                        for k in ks:
                            for kp in ks:
                                A = field_mode(self.vops, i, sgn, k)
                                B = field_mode(self.vops, j, sgn, kp)
                                self._check_on_states(
                                    rep, "commuting pair (%d,%d)" % (i, j),
                                    BracketOp(A, B, field.one), None, states)
                        continue
                    mij = consts.entry(i, j)
                    mji = consts.entry(j, i)
                    cij = field.monomial(mij.pow(-sgn))
                    cji = field.monomial(mji.pow(-sgn))
                    ratio = field.monomial(
                        (mji * mij.pow(-1)).pow(Fraction(sgn, 2)))
                    for k in ks:
                        for kp in ks:
                            lhs = BracketOp(
                                field_mode(self.vops, i, sgn, k),
                                field_mode(self.vops, j, sgn, kp + 1), cij)
                            rhs = ScaledOp(-ratio, BracketOp(
                                field_mode(self.vops, j, sgn, kp),
                                field_mode(self.vops, i, sgn, k + 1), cji))
                            self._check_on_states(
                                rep, "exchange (%d,%d) sgn=%+d k=%d k'=%d"
                                % (i, j, sgn, k, kp), lhs, rhs, states)
        if self.n >= 3:
            lhs = BracketOp(field_mode(self.vops, 2, -1, 0),
                            field_mode(self.vops, 1, -1, 1),
                            self.rs(0, HALF))
            rhs = ScaledOp(-self.rs(Fraction(1, 4), Fraction(1, 4)),
                           BracketOp(field_mode(self.vops, 1, -1, 0),
                                     field_mode(self.vops, 2, -1, 1),
                                     self.rs(-HALF, 0)))
            self._check_on_states(rep, "adjacent short pair instance",
                                  lhs, rhs, states)
        return rep

    def _diag_rhs(self, i, k, kp, v):
        """Right side of the raising-lowering bracket in mode form."""
        field = self.field
        m = k + kp
        d = self.space.roots.d[i]
        den = self.rs(d, 0) - self.rs(0, d)
        out = FockVector.zero(field)
        if m >= 0:
            out = out + self.vops.psi_mode(i, m)(v).scale(
                self.rs(Fraction(-m, 2), -k) / den)
        if m <= 0:
            out = out - self.vops.phi_mode(i, m)(v).scale(
                self.rs(kp, Fraction(m, 2)) / den)
        return out

    def suite_raising_lowering(self):
        """Anchor and window for the raising-lowering commutator."""
        rep = RelationReport(
            "raising-lowering",
            self.window(sum_window=[-2, 2],
                        conventions=self.conventions()))
        field = self.field
        states = self.states()
        ks = [k for k in self.modes_range()]
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                for k in ks:
                    for kp in ks:
                        if abs(k + kp) > 2:
                            continue
                        xp = self.vops.mode(i, +1, k)
                        xm = self.vops.mode(j, -1, kp)
                        for st in states:
                            v = FockVector.basis(field, st)
                            got = xp(xm(v)) - xm(xp(v))
                            if i == j:
                                want = self._diag_rhs(i, k, kp, v)
                            else:
                                want = FockVector.zero(field)
                            rep.record(
                                got == want,
                                lambda i=i, j=j, k=k, kp=kp, st=st, got=got,
                                want=want:
                                "[x%d+(%d), x%d-(%d)] on %s: %r != %r"
                                % (i, k, j, kp, st.render(), got, want))
        return rep

    def suite_serre(self):
        """Cubic and quartic symmetrized relations between coupled
        indices."""
        rep = RelationReport("serre", self.window(sector="origin"))
        field = self.field
        states = self.states(max_degree=min(self.max_degree, Fraction(1)),
                             sector="origin")
        cart = self.space.roots.cartan
        dvec = self.space.roots.d
        pairs2 = [(i, j) for i in range(1, self.n + 1)
                  for j in range(1, self.n + 1)
                  if i != j and cart(i, j) == -1]
        for i, j in pairs2:
            di = dvec[i]
            for sgn in (+1, -1):
                e = sgn if i < j else -sgn
                csum = self.rs(di * e, 0) + self.rs(0, di * e)
                cprod = self.rs(di * e, di * e)
                for k in (0, 1):
                    for n1 in (0, 1):
                        for n2 in (0, 1):
                            parts = []
                            for m1, m2 in set(
                                    itertools.permutations((n1, n2))):
                                x1 = field_mode(self.vops, i, sgn, m1)
                                x2 = field_mode(self.vops, i, sgn, m2)
                                xj = field_mode(self.vops, j, sgn, k)
                                parts.append(ComposeOp(
                                    x1, ComposeOp(x2, xj)))
                                parts.append(ScaledOp(-csum, ComposeOp(
                                    x1, ComposeOp(xj, x2))))
                                parts.append(ScaledOp(cprod, ComposeOp(
                                    xj, ComposeOp(x1, x2))))
                            self._check_on_states(
                                rep, "cubic (%d,%d) sgn=%+d k=%d n=(%d,%d)"
                                % (i, j, sgn, k, n1, n2),
                                SumOp(parts), None, states)
        if self.n >= 2:
            i, j = self.n - 1, self.n
            di = dvec[i]
            for sgn in (+1, -1):
                big = (self.rs(2 * di * sgn, 0)
                       + self.rs(di * sgn, di * sgn)
                       + self.rs(0, 2 * di * sgn))
                prod = self.rs(di * sgn, di * sgn)
                prod3 = self.rs(3 * di * sgn, 3 * di * sgn)
                for k in (0, 1):
                    x0 = field_mode(self.vops, i, sgn, 0)
                    xj = field_mode(self.vops, j, sgn, k)

                    def chain(*ops):
                        expr = ops[-1]
                        for op in reversed(ops[:-1]):
                            expr = ComposeOp(op, expr)
                        return expr

                    parts = [
                        chain(x0, x0, x0, xj),
                        ScaledOp(-big, chain(x0, x0, xj, x0)),
                        ScaledOp(big * prod, chain(x0, xj, x0, x0)),
                        ScaledOp(-prod3, chain(xj, x0, x0, x0)),
                    ]
                    # literal symmetrization over three equal modes
                    expr = ScaledOp(6, SumOp(parts))
                    self._check_on_states(
                        rep, "quartic (%d,%d) sgn=%+d k=%d" % (i, j, sgn, k),
                        expr, None, states)
        return rep

    def suite_bracket_calculus(self):
        """Associative-algebra identities of the twisted bracket on sampled
        concrete operators and twists."""
        rep = RelationReport("bracket-calculus", self.window(samples=6))
        field = self.field
        states = self.states(max_degree=min(self.max_degree, Fraction(1)))
        rng = random.Random(self.seed)
        pool = [field_mode(self.vops, 1, +1, 0),
                field_mode(self.vops, 1, -1, 1),
                field_mode(self.vops, self.n, -1, 0),
                field_mode(self.vops, self.n, +1, -1),
                boson_mode_op(self.vops, 1, 1),
                boson_mode_op(self.vops, 1, -1)]

        def rand_twist():
            er = Fraction(rng.randint(-2, 2), 2)
            return self.rs(er, er) * field.rational(
                Fraction(rng.randint(1, 3), rng.randint(1, 3)))

        for _ in range(6):
            a, b, c = (pool[rng.randrange(len(pool))] for _ in range(3))
            u, v, q = rand_twist(), rand_twist(), rand_twist()
            lhs = BracketOp(a, ComposeOp(b, c), v)
            rhs = SumOp((ComposeOp(BracketOp(a, b, q), c),
                         ScaledOp(q, ComposeOp(b, BracketOp(a, c, v / q)))))
            self._check_on_states(rep, "product rule (right)", lhs, rhs,
                                  states)
            lhs = BracketOp(ComposeOp(a, b), c, v)
            rhs = SumOp((ComposeOp(a, BracketOp(b, c, q)),
                         ScaledOp(q, ComposeOp(BracketOp(a, c, v / q), b))))
            self._check_on_states(rep, "product rule (left)", lhs, rhs,
                                  states)
            lhs = BracketOp(a, BracketOp(b, c, u), v)
            rhs = SumOp((BracketOp(BracketOp(a, b, q), c, u * v / q),
                         ScaledOp(q, BracketOp(
                             b, BracketOp(a, c, v / q), u / q))))
            self._check_on_states(rep, "jacobi (right)", lhs, rhs, states)
            lhs = BracketOp(BracketOp(a, b, u), c, v)
            rhs = SumOp((BracketOp(a, BracketOp(b, c, q), u * v / q),
                         ScaledOp(q, BracketOp(
                             BracketOp(a, c, v / q), b, u / q))))
            self._check_on_states(rep, "jacobi (left)", lhs, rhs, states)
            # two-fold bracket expansion and its reversal
            lhs = nested_bracket((a, a, b), (u, v), "round")
            rhs = SumOp((
                ComposeOp(a, ComposeOp(a, b)),
                ScaledOp(-(u + v), ComposeOp(a, ComposeOp(b, a))),
                ScaledOp(u * v, ComposeOp(b, ComposeOp(a, a)))))
            self._check_on_states(rep, "square expansion", lhs, rhs, states)
            rhs2 = ScaledOp(u * v, nested_bracket(
                (b, a, a), (field.one / u, field.one / v), "angle"))
            self._check_on_states(rep, "square reversal", lhs, rhs2, states)
            # derivation property of the plain commutator over a nest
            bs = [pool[rng.randrange(len(pool))] for _ in range(3)]
            ts = [rand_twist(), rand_twist()]
            lhs = BracketOp(a, nested_bracket(bs, ts, "round"), field.one)
            parts = []
            for pos in range(3):
                inner = list(bs)
                inner[pos] = BracketOp(a, bs[pos], field.one)
                parts.append(nested_bracket(inner, ts, "round"))
            self._check_on_states(rep, "commutator derivation", lhs,
                                  SumOp(parts), states)
        return rep

    def suite_root_vectors(self):
        """Vanishing brackets against the nested column vectors."""
        rep = RelationReport("root-vectors", self.window())
        field = self.field
        states = self.states(max_degree=min(self.max_degree, Fraction(1)))
        rv = build_root_vectors(self.vops)
        xm = lambda i, k: field_mode(self.vops, i, -1, k)
        notes = {}
        for i in range(2, self.n):
            self._check_on_states(
                rep, "short-column self bracket i=%d" % i,
                BracketOp(xm(i, 0), rv[("alpha_minus", i)],
                          self.rs(HALF, 0)), None, states)
        # step brackets vanish strongly (each one-sided product is zero,
        # hence every twist) only while the top letter of the nested vector
        # is short; at i = n-1 the bracket is the first beta-column vector
        # and must not vanish
        for i in range(2, self.n - 1):
            self._check_on_states(
                rep, "short-column step bracket i=%d" % i,
                BracketOp(xm(i, 0), rv[("alpha_minus", i + 1)], field.one),
                None, states)
            tw = BracketOp(xm(i, 0), rv[("alpha_minus", i + 1)],
                           self.rs(-HALF, HALF))
            ok = all(tw.apply(FockVector.basis(field, st)).is_zero()
                     for st in states)
            notes["twisted step bracket i=%d" % i] = ok
        nonzero = any(
            BracketOp(xm(self.n - 1, 0), rv[("alpha_minus", self.n)],
                      self.rs(-HALF, 0)).apply(
                FockVector.basis(field, st)).is_zero() is False
            for st in states)
        rep.record(nonzero, lambda: "step bracket at i=n-1 vanished but "
                   "must equal the first beta-column vector")
        # beta-side vanishing family: x_i commutes exactly with the column
        # two slots up (plain commutator, not one-sided vanishing)
        for i in range(2, self.n - 1):
            self._check_on_states(
                rep, "beta-column skip bracket i=%d" % i,
                BracketOp(xm(i, 0), rv[("beta_minus", i + 2)], field.one),
                None, states)
        self._check_on_states(
            rep, "long-column self bracket",
            BracketOp(xm(self.n, 0), rv[("alpha_minus", self.n)],
                      self.rs(1, 0)), None, states)
        for i in range(2, self.n):
            self._check_on_states(
                rep, "long-column descent bracket i=%d" % i,
                BracketOp(xm(i, 0), rv[("beta_minus", i)],
                          self.rs(0, -HALF)), None, states)
        if self.n >= 3:
            self._check_on_states(
                rep, "reconstructed column vanishing (twisted)",
                BracketOp(xm(1, 0), rv[("beta_minus", 3)],
                          self.rs(0, -HALF)), None, states)
            rep.window["reconstructed"] = [
                "column vanishing (twisted)"]
        rep.window["twisted_variants"] = notes
        return rep

    def suite_affine_images(self):
        """The affine-node generator images: commutation with the finite
        lowering generators, the diagonal commutator with the mirror image,
        and the mixed symmetrized relations."""
        rep = RelationReport("affine-images", self.window())
        field = self.field
        states = self.states(max_degree=min(self.max_degree, Fraction(1)))
        consts = self.space.consts
        rv = build_root_vectors(self.vops)

        # pairing specializations feeding the vanishing brackets
        want = {1: Monomial(1, 0, 8), self.n: Monomial(1, -8, -8)}
        for i in range(1, self.n + 1):
            w = want.get(i if i in (1, self.n) else None, Monomial(1))
            got = consts.entry(i, 0)
            rep.record(got.coeff == w.coeff and got.ep == w.ep
                       and got.eq == w.eq,
                       lambda i=i, got=got: "pairing (i,0) at i=%d: %r"
                       % (i, got))
        for i in range(1, self.n + 1):
            tw = field.monomial(consts.entry(i, 0).pow(-1))
            self._check_on_states(
                rep, "lowering vs highest-root bracket i=%d" % i,
                BracketOp(field_mode(self.vops, i, -1, 0),
                          rv["theta_minus"], tw), None, states)

        # diagonal commutator decides the mirror-image normalization
        outcomes = {}
        rms = self.rs(1, 0) - self.rs(0, 1)
        for variant in ("display", "proof"):
            e0, f0, om0, om0p = build_E0_F0(self.vops, variant)
            comm = BracketOp(e0, f0, field.one)
            rhs = ScaledOp(field.one / rms, SumOp(
                (om0, ScaledOp(-1, om0p))))
            ok = True
            for st in states:
                v = FockVector.basis(field, st)
                if comm.apply(v) != rhs.apply(v):
                    ok = False
                    break
            outcomes[variant] = ok
        rep.window["f0_variant_outcomes"] = outcomes
        if self.f0_variant == "auto":
            winners = [k for k, v in outcomes.items() if v]
            rep.record(len(winners) == 1,
                       lambda: "mirror-image variant not uniquely "
                       "determined: %r" % (outcomes,))
            self.f0_resolved = winners[0] if len(winners) == 1 else None
        else:
            rep.record(outcomes[self.f0_variant],
                       lambda: "selected variant %r fails the diagonal "
                       "commutator" % (self.f0_variant,))
            self.f0_resolved = self.f0_variant
        rep.window["conventions"] = self.conventions()

        variant = self.f0_resolved or "proof"
        e0, _, _, _ = build_E0_F0(self.vops, variant)

        # eigen-consistency of the affine raising image
        for j in range(1, self.n + 1):
            lhs = self._omega_conj(j, False, e0)
            c0j = field.monomial(consts.entry(0, j))
            self._check_on_states(rep, "torus conjugation of affine image "
                                  "j=%d" % j, lhs, ScaledOp(c0j, e0), states)

        # long-index exchange and quartic mixed relation
        en = field_mode(self.vops, self.n, +1, 0)
        e1 = field_mode(self.vops, 1, +1, 0)
        lhs = SumOp((ComposeOp(en, e0),
                     ScaledOp(-self.rs(1, 1), ComposeOp(e0, en))))
        self._check_on_states(rep, "long-index exchange", lhs, None, states)
        big = self.rs(1, 0) + self.rs(HALF, HALF) + self.rs(0, 1)

        def chain(*ops):
            expr = ops[-1]
            for op in reversed(ops[:-1]):
                expr = ComposeOp(op, expr)
            return expr

        quart = SumOp((
            chain(e0, e1, e1, e1),
            ScaledOp(-big, chain(e1, e0, e1, e1)),
            ScaledOp(big * self.rs(HALF, HALF), chain(e1, e1, e0, e1)),
            ScaledOp(-self.rs(Fraction(3, 2), Fraction(3, 2)),
                     chain(e1, e1, e1, e0)),
        ))
        self._check_on_states(rep, "quartic mixed relation", quart, None,
                              states)
        return rep
