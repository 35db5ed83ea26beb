"""Level-one free-boson module over lattice group-algebra labels.

States are finite products of boson creation modes applied to a lattice
label ``e^lam e^lt`` (main lattice over the n simple roots, companion
lattice over the n-1 companion roots), restricted to admissible labels.
Two commuting boson families act: the main family ``a`` indexed 1..n and
the companion family ``b`` indexed 1..n-1; equal-family contractions share
one table of constants, cross-family contractions vanish.

All coefficient arithmetic happens in a scalar field backend (symbolic or
numeric-rational); every operator here is an exact linear map on finite
vectors.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import Cocycle, LatticePoint, RootData, StructConsts


class BosonMode:
    """One oscillator mode: family 'a' (main) or 'b' (companion), index,
    and a nonzero integer degree (negative = creation)."""

    __slots__ = ("family", "index", "degree")

    def __init__(self, family, index, degree):
        if family not in ("a", "b"):
            raise ValueError("family must be 'a' or 'b'")
        if degree == 0:
            raise ValueError("mode degree must be nonzero")
        self.family = family
        self.index = int(index)
        self.degree = int(degree)

    def key(self):
        return (self.family, self.index, self.degree)

    def __eq__(self, other):
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "%s%d(%d)" % (self.family, self.index, self.degree)


class FockBasisState:
    """A multiset of creation modes (canonically sorted) over a lattice
    label."""

    __slots__ = ("creators", "point", "_hash")

    def __init__(self, creators, point):
        cs = tuple(sorted((c.key() for c in creators)))
        assert all(deg < 0 for _, _, deg in cs)
        self.creators = cs
        self.point = point
        self._hash = hash((cs, point))

    @staticmethod
    def vacuum(n):
        return FockBasisState((), LatticePoint((0,) * n, (0,) * (n - 1)))

    def with_creators(self, creators):
        out = object.__new__(FockBasisState)
        out.creators = creators
        out.point = self.point
        out._hash = hash((creators, self.point))
        return out

    def with_point(self, point):
        out = object.__new__(FockBasisState)
        out.creators = self.creators
        out.point = point
        out._hash = hash((self.creators, point))
        return out

    def __eq__(self, other):
        return self.creators == other.creators and self.point == other.point

    def __hash__(self):
        return self._hash

    def render(self):
        mods = " ".join("%s%d(%d)" % c for c in self.creators)
        return "%s| lam=%r lt=%r" % (mods + " " if mods else "",
                                     list(self.point.lam),
                                     list(self.point.lt))

    __repr__ = render


class FockVector:
    """Finite linear combination of basis states with field coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for st, c in terms.items():
                if c != field.zero:
                    self.terms[st] = c

    @staticmethod
    def zero(field):
        return FockVector(field)

    @staticmethod
    def basis(field, state, coeff=None):
        return FockVector(field, {state: coeff if coeff is not None
                                  else field.one})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for st, c in other.terms.items():
            out[st] = out.get(st, self.field.zero) + c
        return FockVector(self.field, out)

    def __neg__(self):
        return FockVector(self.field,
                          {st: -c for st, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == self.field.zero:
            return FockVector(self.field)
        return FockVector(self.field,
                          {st: v * c for st, v in self.terms.items()})

    __mul__ = scale

    def __eq__(self, other):
        return self.terms == other.terms

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join("(%r) %s" % (c, st.render())
                          for st, c in sorted(self.terms.items(),
                                              key=lambda t: t[0].creators))

    __repr__ = render


class FockSpace:
    """Exact operator actions on the level-one module for a fixed rank and
    scalar backend."""

    def __init__(self, n, field):
        self.n = n
        self.field = field
        self.roots = RootData(n)
        self.consts = StructConsts(n)
        self.cocycle = Cocycle(n)
        self._contraction = {}

    def vacuum_vector(self):
        return FockVector.basis(self.field, FockBasisState.vacuum(self.n))

    # -- oscillator sector --------------------------------------------
    def contraction(self, i, j, m):
        """Scalar value of the annihilation-creation contraction of degree
        m > 0 between same-family indices i and j, at level one."""
        key = (i, j, m)
        out = self._contraction.get(key)
        if out is None:
            f = self.field
            a = self.roots.bform(i, j)
            out = (f.rs_pow(Fraction(m, 2) - m * a / 2,
                            Fraction(m, 2) - m * a / 2)
                   * f.qnum(m * a) * f.qnum(m)
                   * f.rational(Fraction(1, m)))
            self._contraction[key] = out
        return out

    def apply_boson(self, mode, v):
        """Creation inserts the mode; annihilation contracts against every
        matching creator."""
        field = self.field
        k = mode.key()
        out = {}
        if mode.degree < 0:
            for st, c in v.terms.items():
                new = st.with_creators(tuple(sorted(st.creators + (k,))))
                out[new] = out.get(new, field.zero) + c
            return FockVector(field, out)
        fam, idx, m = k
        for st, c in v.terms.items():
            seen = set()
            for pos, (cf, ci, cd) in enumerate(st.creators):
                if cf != fam or cd != -m or (cf, ci, cd) in seen:
                    continue
                seen.add((cf, ci, cd))
                mult = st.creators.count((cf, ci, cd))
                new = st.with_creators(st.creators[:pos]
                                       + st.creators[pos + 1:])
                coeff = c * self.contraction(idx, ci, m) * mult
                out[new] = out.get(new, field.zero) + coeff
        return FockVector(field, out)

    # -- zero modes and lattice sector --------------------------------
    def zero_mode(self, i, family, state):
        """Eigenvalue of the degree-zero mode on a basis state (rational,
        possibly half-integral)."""
        if family == "a":
            return self.roots.pair_root(i, state.point.lam)
        return self.roots.tilde_pair_root(i, state.point.lt)

    def shift(self, alpha, alpha_tilde, v, enforce=True):
        """Translate the lattice labels.  With ``enforce`` the result must
        stay admissible; field factors shift one lattice at a time and pass
        ``enforce=False``, restoring admissibility in their product."""
        alpha = tuple(int(c) for c in alpha)
        alpha_tilde = tuple(int(c) for c in alpha_tilde)
        out = {}
        field = self.field
        for st, c in v.terms.items():
            lam = tuple(x + y for x, y in zip(st.point.lam, alpha))
            lt = tuple(x + y for x, y in zip(st.point.lt, alpha_tilde))
            pt = LatticePoint(lam, lt)
            if enforce and not pt.is_admissible(self.roots):
                raise ValueError("shift to inadmissible lattice point %r"
                                 % (pt,))
            new = st.with_point(pt)
            out[new] = out.get(new, field.zero) + c
        return FockVector(field, out)

    def omega_eigen(self, i, primed, state):
        """Torus eigenvalue monomial on one basis state, index 0..n."""
        lam = state.point.lam
        if primed:
            return self.consts.pairing_rev(i, lam).pow(-1)
        return self.consts.pairing(lam, i)

    def apply_omega(self, i, primed, v, power=1):
        field = self.field
        out = {}
        for st, c in v.terms.items():
            m = self.omega_eigen(i, primed, st).pow(power)
            out[st] = c * field.monomial(m)
        return FockVector(field, out)

    def apply_eps(self, alpha, v):
        """Diagonal cocycle operator for a root-lattice vector alpha."""
        field = self.field
        out = {}
        for st, c in v.terms.items():
            m = self.cocycle.value(alpha, st.point.lam)
            out[st] = c * field.monomial(m)
        return FockVector(field, out)

    def sign_eigen(self, j, state):
        """(-1) to the doubled degree-zero eigenvalue; must be integral."""
        e = 2 * self.roots.pair_root(j, state.point.lam)
        if e.denominator != 1:
            raise ValueError("doubled zero-mode eigenvalue %r not integral"
                             % (e,))
        return -1 if int(e) % 2 else 1

    def apply_sign(self, j, v):
        field = self.field
        out = {}
        for st, c in v.terms.items():
            s = self.sign_eigen(j, st)
            out[st] = c if s == 1 else -c
        return FockVector(field, out)

    def weighted_degree(self, state):
        """Sum of d_index * |degree| over the creators (companion modes at
        the short-root weight 1/2)."""
        total = Fraction(0)
        for fam, idx, deg in state.creators:
            d = self.roots.d[idx] if fam == "a" else Fraction(1, 2)
            total += d * (-deg)
        return total
