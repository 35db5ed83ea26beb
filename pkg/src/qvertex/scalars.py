"""Exact arithmetic in the field Q(p, q) of Laurent fractions in the two
deformation roots, with r = p**8 and s = q**8.

Every power r**(a/8) * s**(b/8) with integer a, b is an honest monomial here,
so no radical engine is needed anywhere downstream.

Two interchangeable backends expose the same construction surface:

* ``SymbolicField`` -- elements are :class:`Scalar`, canonical-form fractions
  of sparse Laurent polynomials over Q.  Equality is decidable by comparing
  canonical forms.
* ``NumericField`` -- elements are plain :class:`fractions.Fraction` obtained
  by evaluating at a fixed rational point (p0, q0) with p0**8 != +-q0**8.

Operator-level code is written against the common surface only, so whole
verification suites can be re-run numerically for speed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import gmpy2
import sympy

_P, _Q = sympy.symbols("p q")


def _frac(n, d):
    """Fraction(n, d) for int n and positive int d, skipping the slow
    general-purpose constructor."""
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    f = object.__new__(Fraction)
    f._numerator = n
    f._denominator = d
    return f

# ---------------------------------------------------------------------------
# sparse Laurent polynomials as dicts {(ep, eq): Fraction}, no zero values

def _padd(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def _pneg(a):
    return {k: -v for k, v in a.items()}


# ---------------------------------------------------------------------------
# fast univariate kernel for (p,q)-homogeneous polynomials
#
# Almost every polynomial arising from the operator and series constructions
# is homogeneous in total (p,q)-degree, so it dehomogenizes to one variable,
# and its exponents sit on a sparse arithmetic progression that can be
# compressed away.  Multiplication then packs each operand into a single big
# integer (Kronecker substitution, one gmpy2 multiply); gcd with cofactors
# runs through the integer-evaluation heuristic over ZZ.


def _homdeg(a):
    """Total degree if the poly is homogeneous in (p, q), else None."""
    it = iter(a)
    e, f = next(it)
    d = e + f
    for e, f in it:
        if e + f != d:
            return None
    return d


def _hom_info(a):
    """(total degree, min p-exponent, exponent stride) for a homogeneous
    dict, or None when not homogeneous.  Stride 0 means a single term."""
    d = _homdeg(a)
    if d is None:
        return None
    emin = min(e for e, f in a)
    st = 0
    for e, f in a:
        st = gcd(st, e - emin)
    return d, emin, st


def _hom_ints(a, emin, st):
    """Denominator-cleared dense int list of a homogeneous dict, compressed
    by stride ``st`` from base exponent ``emin``; returns
    (list lowest-first, clearing denominator, max abs coefficient)."""
    clear = 1
    for v in a.values():
        clear = lcm(clear, v.denominator)
    n = (max(e for e, f in a) - emin) // st
    out = [0] * (n + 1)
    mx = 0
    for (e, f), v in a.items():
        c = v.numerator * (clear // v.denominator)
        out[(e - emin) // st] = c
        if c < 0:
            c = -c
        if c > mx:
            mx = c
    return out, clear, mx


def _offset(k, n):
    """half * (1 + x + ... + x^(n-1)) evaluated at x = 2**k, shifting signed
    digits in (-half, half) into [0, 2**k)."""
    return (((1 << (k * n)) - 1) // ((1 << k) - 1)) << (k - 1)


def _pack(f, k):
    """Evaluate the int list (lowest exponent first) at x = 2**k; signed
    coefficients must satisfy |c| < 2**(k-1)."""
    half = 1 << (k - 1)
    return gmpy2.pack([c + half for c in f], k) - _offset(k, len(f))


def _unpack(r, k, n):
    """The n balanced base-2**k digits of r, lowest first; the inverse of
    ``_pack`` whenever every true coefficient fits below 2**(k-1).  Returns
    None when r provably has no such expansion."""
    t = r + _offset(k, n)
    if t < 0:
        return None
    digs = gmpy2.unpack(gmpy2.mpz(t), k)
    if len(digs) > n:
        return None
    half = 1 << (k - 1)
    out = [int(d) - half for d in digs]
    # gmpy2 drops high zero digits; a true digit 0 encodes as half != 0,
    # so missing entries mean the expansion does not exist
    return out if len(out) == n else None


def _kmul(a, b, ma=None, mb=None):
    """Integer-list convolution via Kronecker substitution (lowest first)."""
    if ma is None:
        ma = max(map(abs, a))
    if mb is None:
        mb = max(map(abs, b))
    k = (ma * mb * min(len(a), len(b))).bit_length() + 2
    r = _pack(a, k) * _pack(b, k)
    return _unpack(r, k, len(a) + len(b) - 1)


def _heugcd(f, g):
    """(h, f/h, g/h) with h = gcd of two int lists (lowest first, nonzero
    trailing constant), by gcd of integer evaluations at 2**k; candidates are
    verified by exact multiplication.  None when the heuristic keeps failing.
    """
    m = max(max(map(abs, f)), max(map(abs, g)))
    k = m.bit_length() + 4
    nmax = min(len(f), len(g))
    for _ in range(6):
        ff, gg = _pack(f, k), _pack(g, k)
        h = _unpack(gmpy2.gcd(ff, gg), k, nmax)
        if h is not None:
            while len(h) > 1 and h[-1] == 0:
                h.pop()
            cont = 0
            for c in h:
                cont = gcd(cont, c)
            if cont > 1:
                h = [c // cont for c in h]
            if h[-1] < 0:
                h = [-c for c in h]
            hv = _pack(h, k)
            if hv and ff % hv == 0 and gg % hv == 0:
                cf = _unpack(ff // hv, k, len(f) - len(h) + 1)
                cg = _unpack(gg // hv, k, len(g) - len(h) + 1)
                if cf is not None and cg is not None \
                        and _kmul(h, cf) == f and _kmul(h, cg) == g:
                    return h, cf, cg
        k *= 2
    return None


# A "rep" is the kernel form of one homogeneous poly: a tuple
# (lst, L, e0, st, deg, mx) meaning (1/L) * sum_i lst[i] p^(e0+st*i)
# q^(deg-e0-st*i), with mx an upper bound on max |lst[i]|.  st == 0 marks a
# single term.  Scalars memoize the rep pair of their num/den so chained
# arithmetic runs entirely on integer lists.


def _poly_rep(a):
    if not a:
        return None
    info = _hom_info(a)
    if info is None:
        return None
    deg, e0, st = info
    if st == 0:
        ((_e, _f), v), = a.items()
        return ([v.numerator], v.denominator, e0, 0, deg, abs(v.numerator))
    lst, clear, mx = _hom_ints(a, e0, st)
    return (lst, clear, e0, st, deg, mx)


def _expand(lst, s_old, s_new):
    """Re-express a compressed list on a finer stride."""
    if s_old == 0 or s_old == s_new:
        return lst
    f = s_old // s_new
    out = [0] * ((len(lst) - 1) * f + 1)
    for i, c in enumerate(lst):
        out[i * f] = c
    return out


def _rmul(ra, rb):
    la, La, ea, sa, da, ma = ra
    lb, Lb, eb, sb, db, mb = rb
    st = gcd(sa, sb)
    if st == 0:
        return ([la[0] * lb[0]], La * Lb, ea + eb, 0, da + db, ma * mb)
    ua, ub = _expand(la, sa, st), _expand(lb, sb, st)
    conv = _kmul(ua, ub, ma, mb)
    return (conv, La * Lb, ea + eb, st, da + db,
            ma * mb * min(len(ua), len(ub)))


def _radd(ra, rb):
    la, La, ea, sa, da, ma = ra
    lb, Lb, eb, sb, db, mb = rb
    if da != db:
        return None
    st = gcd(gcd(sa, sb), ea - eb)
    L = lcm(La, Lb)
    ka, kb = L // La, L // Lb
    if st == 0:
        return ([la[0] * ka + lb[0] * kb], L, ea, 0, da, ma * ka + mb * kb)
    e0 = min(ea, eb)
    top = max(ea + sa * (len(la) - 1), eb + sb * (len(lb) - 1))
    out = [0] * ((top - e0) // st + 1)
    for i, c in enumerate(la):
        out[(ea - e0 + sa * i) // st] += c * ka
    for i, c in enumerate(lb):
        out[(eb - e0 + sb * i) // st] += c * kb
    return (out, L, e0, st, da, ma * ka + mb * kb)


def _rep_trim(r):
    """Strip zero entries at both ends, folding them into the base exponent."""
    lst, L, e0, st, deg, mx = r
    i0 = 0
    while not lst[i0]:
        i0 += 1
    i1 = len(lst)
    while not lst[i1 - 1]:
        i1 -= 1
    if i0 or i1 != len(lst):
        return (lst[i0:i1], L, e0 + st * i0, st, deg, mx)
    return r


def _scalar_from_reps(nr, dr):
    """Canonical Scalar for the ratio of two poly reps, or None when the
    heuristic gcd gives up."""
    lstn, Ln, e0n, stn, degn, _mn = _rep_trim(nr)
    lstd, Ld, e0d, std, degd, _md = _rep_trim(dr)
    de = e0n - e0d
    if len(lstd) == 1:
        ca, cb, st, nb = lstn, lstd, stn, 1
    else:
        st = gcd(stn, std)
        got = _heugcd(_expand(lstn, stn, st), _expand(lstd, std, st))
        if got is None:
            return None
        _h, ca, cb = got
        nb = len(cb)
    lc = cb[-1]
    if lc < 0:
        ca = [-c for c in ca]
        cb = [-c for c in cb]
        lc = -lc
    df = (degn - e0n) - (degd - e0d) + st * (nb - 1)
    ns = Ln * lc
    num = {(de + st * i, df - st * i): _frac(v * Ld, ns)
           for i, v in enumerate(ca) if v}
    if nb == 1:
        den = _ONE
    else:
        den = {(st * i, st * (nb - 1 - i)): _frac(v, lc)
               for i, v in enumerate(cb) if v}
    return Scalar(num, den, _canonical=True)


def _pmul(a, b):
    if not a or not b:
        return {}
    if len(a) == 1:
        ((ea, fa), ca), = a.items()
        return {(ea + eb, fa + fb): ca * cb for (eb, fb), cb in b.items()}
    if len(b) == 1:
        ((eb, fb), cb), = b.items()
        return {(ea + eb, fa + fb): ca * cb for (ea, fa), ca in a.items()}
    ia, ib = _hom_info(a), _hom_info(b)
    if ia is not None and ib is not None:
        (da, ea0, sa), (db, eb0, sb) = ia, ib
        st = gcd(sa, sb)
        ua, la, ma = _hom_ints(a, ea0, st)
        ub, lb, mb = _hom_ints(b, eb0, st)
        conv = _kmul(ua, ub, ma, mb)
        scale = la * lb
        d, e0 = da + db, ea0 + eb0
        return {(e0 + st * i, d - e0 - st * i): _frac(v, scale)
                for i, v in enumerate(conv) if v}
    # general sparse fallback, denominators cleared to integers
    if len(a) > len(b):
        a, b = b, a
    la = lb = 1
    for c in a.values():
        la = lcm(la, c.denominator)
    for c in b.values():
        lb = lcm(lb, c.denominator)
    ta = [(ea, fa, c.numerator * (la // c.denominator))
          for (ea, fa), c in a.items()]
    tb = [(eb, fb, c.numerator * (lb // c.denominator))
          for (eb, fb), c in b.items()]
    out = {}
    get = out.get
    for ea, fa, ca in ta:
        for eb, fb, cb in tb:
            k = (ea + eb, fa + fb)
            out[k] = get(k, 0) + ca * cb
    scale = la * lb
    return {k: _frac(v, scale) for k, v in out.items() if v}


def _pscale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _pshift(a, de, df):
    if not (de or df):
        return dict(a)
    return {(e + de, f + df): v for (e, f), v in a.items()}


def _pminexp(a):
    return (min(e for e, _ in a), min(f for _, f in a))


def _plead(a):
    # lex-leading monomial key
    return max(a)


def _to_sympy(a):
    return sympy.Poly.from_dict(
        {k: sympy.Rational(v.numerator, v.denominator) for k, v in a.items()},
        _P, _Q, domain="QQ")


def _from_sympy(poly):
    out = {}
    for monom, coeff in poly.terms():
        out[(int(monom[0]), int(monom[1]))] = Fraction(coeff.p, coeff.q)
    return out


def _freeze(a):
    return tuple(sorted((k, v) for k, v in a.items()))


@lru_cache(maxsize=1 << 16)
def _gcd_cached(fa, fb):
    g = sympy.gcd(_to_sympy(dict(fa)), _to_sympy(dict(fb)))
    return _freeze(_from_sympy(g))


def _pgcd(a, b):
    g, _qa, _qb = _pcofactors(a, b)
    return g


def _pcofactors(a, b):
    """(gcd, a/gcd, b/gcd) for ordinary polys with min exponent 0 in each
    variable."""
    if len(a) == 1 or len(b) == 1:
        return dict(_ONE), dict(a), dict(b)
    ia, ib = _hom_info(a), _hom_info(b)
    if ia is not None and ib is not None:
        (da, _ea0, sa), (db, _eb0, sb) = ia, ib
        st = gcd(sa, sb)
        if st:
            ua, la, _ma = _hom_ints(a, 0, st)
            ub, lb, _mb = _hom_ints(b, 0, st)
            got = _heugcd(ua, ub)
            if got is not None:
                h, ca, cb = got
                nh = st * (len(h) - 1)
                g = {(st * i, nh - st * i): Fraction(v)
                     for i, v in enumerate(h) if v}
                qa = {(st * i, da - nh - st * i): _frac(v, la)
                      for i, v in enumerate(ca) if v}
                qb = {(st * i, db - nh - st * i): _frac(v, lb)
                      for i, v in enumerate(cb) if v}
                return g, qa, qb
    g = dict(_gcd_cached(_freeze(a), _freeze(b)))
    return g, _pdivexact(a, g), _pdivexact(b, g)


def _pdivexact(a, g):
    if g == {(0, 0): Fraction(1)}:
        return dict(a)
    if len(g) == 1:
        ((e, f), c), = g.items()
        return {(ea - e, fa - f): ca / c for (ea, fa), ca in a.items()}
    q, r = sympy.div(_to_sympy(a), _to_sympy(g))
    assert r.is_zero
    return _from_sympy(q)


def _peval(a, p0, q0):
    return sum((c * p0 ** e * q0 ** f for (e, f), c in a.items()),
               Fraction(0))


def _pstr(a):
    if not a:
        return "0"
    parts = []
    for (e, f), c in sorted(a.items(), reverse=True):
        body = []
        if c != 1 or (e == 0 and f == 0):
            body.append(str(c))
        if e:
            body.append("p" if e == 1 else "p^%d" % e)
        if f:
            body.append("q" if f == 1 else "q^%d" % f)
        parts.append("*".join(body))
    return " + ".join(parts).replace("+ -", "- ")


_ONE = {(0, 0): Fraction(1)}


class Scalar:
    """Canonical-form fraction of sparse Laurent polynomials in p, q.

    Invariants after construction: the denominator is an ordinary polynomial
    with minimal exponent 0 in each variable and a monic lex-leading term,
    gcd(num, den) = 1, and any pure monomial factor lives in the numerator.
    Equality is plain dict comparison.
    """

    __slots__ = ("num", "den", "_rep")

    def __init__(self, num, den=None, _canonical=False):
        self._rep = None
        if den is None:
            den = _ONE
        if not den:
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num, self.den = num, den
            return
        self.num, self.den = _normalize(num, den)

    def _getrep(self):
        """Memoized (num rep, den rep) kernel pair, or False when either
        part is not (p,q)-homogeneous."""
        r = self._rep
        if r is None:
            nr = _poly_rep(self.num)
            dr = _poly_rep(self.den)
            r = (nr, dr) if nr is not None and dr is not None else False
            self._rep = r
        return r

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(c):
        c = Fraction(c)
        return Scalar({(0, 0): c} if c else {}, _ONE, _canonical=True)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        ra, rb = self._getrep(), other._getrep()
        if ra and rb:
            num = _radd(_rmul(ra[0], rb[1]), _rmul(rb[0], ra[1]))
            if num is not None:
                if not any(num[0]):
                    return Scalar({}, _ONE, _canonical=True)
                out = _scalar_from_reps(num, _rmul(ra[1], rb[1]))
                if out is not None:
                    return out
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return Scalar({}, _ONE, _canonical=True)
        ra, rb = self._getrep(), other._getrep()
        if ra and rb:
            out = _scalar_from_reps(_rmul(ra[0], rb[0]),
                                    _rmul(ra[1], rb[1]))
            if out is not None:
                return out
        return Scalar(_pmul(self.num, other.num),
                      _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        if not self.num:
            return self
        ra, rb = self._getrep(), other._getrep()
        if ra and rb:
            out = _scalar_from_reps(_rmul(ra[0], rb[1]),
                                    _rmul(ra[1], rb[0]))
            if out is not None:
                return out
        return Scalar(_pmul(self.num, other.den),
                      _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (Scalar(_ONE) / self) ** (-e)
        out = Scalar(_ONE, _canonical=True)
        base = self
        while e:
            if e & 1:
                out = out * base
            base_sq = base * base if e > 1 else base
            base, e = base_sq, e >> 1
        return out

    def inv(self):
        return Scalar(_ONE) / self

    # -- predicates / conversions -------------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((_freeze(self.num), _freeze(self.den)))

    def is_monomial(self):
        return len(self.num) == 1 and self.den == _ONE

    def evaluate(self, p0, q0):
        """Exact rational value at (p0, q0); raises on a pole."""
        p0, q0 = Fraction(p0), Fraction(q0)
        if p0 == 0 or q0 == 0:
            raise ZeroDivisionError("evaluation point must avoid p=0, q=0")
        d = _peval(self.den, p0, q0)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return _peval(self.num, p0, q0) / d

    def __repr__(self):
        if self.den == _ONE:
            return _pstr(self.num)
        return "(%s)/(%s)" % (_pstr(self.num), _pstr(self.den))


def _normalize(num, den):
    if not num:
        return {}, _ONE
    # strip unit monomials so both parts become ordinary polynomials
    ne, nf = _pminexp(num)
    de, df = _pminexp(den)
    n = _pshift(num, -ne, -nf)
    d = _pshift(den, -de, -df)
    if len(d) == 1:
        c = d[(0, 0)]
        n = _pscale(n, 1 / c)
        d = _ONE
    else:
        if len(n) > 1:
            g, qn, qd = _pcofactors(n, d)
            if g != _ONE:
                n, d = qn, qd
                # re-strip: division may reintroduce monomial content
                if n:
                    e2, f2 = _pminexp(n)
                    ne, nf = ne + e2, nf + f2
                    n = _pshift(n, -e2, -f2)
                e2, f2 = _pminexp(d)
                de, df = de + e2, df + f2
                d = _pshift(d, -e2, -f2)
        if len(d) == 1:
            c = d[(0, 0)]
            n = _pscale(n, 1 / c)
            d = _ONE
        else:
            lc = d[_plead(d)]
            if lc != 1:
                n = _pscale(n, 1 / lc)
                d = _pscale(d, 1 / lc)
    return _pshift(n, ne - de, nf - df), d


class Monomial:
    """A single term c * p**ep * q**eq with rational c != 0."""

    __slots__ = ("coeff", "ep", "eq")

    def __init__(self, coeff=1, ep=0, eq=0):
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ValueError("monomial coefficient must be nonzero")
        self.coeff, self.ep, self.eq = coeff, int(ep), int(eq)

    def pow(self, e):
        """Exact power for rational e with denominator dividing 8.

        Requires the result to stay on the p,q grid: e*ep and e*eq must be
        integers, and a negative coefficient admits only integral e.
        """
        e = Fraction(e)
        if self.coeff not in (1, -1) and e.denominator != 1:
            raise ValueError("fractional power of a non-unit coefficient")
        if self.coeff == -1 and e.denominator != 1:
            raise ValueError("fractional power of a negative monomial")
        ep, eq = e * self.ep, e * self.eq
        if ep.denominator != 1 or eq.denominator != 1:
            raise ValueError("exponent leaves the p,q grid: %s^%s" % (self, e))
        coeff = self.coeff ** int(e) if e.denominator == 1 else self.coeff
        return Monomial(coeff, int(ep), int(eq))

    def __mul__(self, other):
        return Monomial(self.coeff * other.coeff,
                        self.ep + other.ep, self.eq + other.eq)

    def __eq__(self, other):
        return (isinstance(other, Monomial) and self.coeff == other.coeff
                and self.ep == other.ep and self.eq == other.eq)

    def __hash__(self):
        return hash((self.coeff, self.ep, self.eq))

    def __repr__(self):
        return _pstr({(self.ep, self.eq): self.coeff})


class SymbolicField:
    """Element factory for the symbolic backend (elements are Scalar)."""

    symbolic = True

    def __init__(self):
        self.zero = Scalar({}, _canonical=True)
        self.one = Scalar(_ONE, _canonical=True)

    def rational(self, c):
        return Scalar.from_rational(c)

    def mono(self, coeff=1, ep=0, eq=0):
        """The scalar coeff * p**ep * q**eq."""
        c = Fraction(coeff)
        if c == 0:
            return self.zero
        return Scalar({(int(ep), int(eq)): c}, _canonical=True)

    def monomial(self, m):
        return self.mono(m.coeff, m.ep, m.eq)

    def rs_pow(self, er, es):
        """r**er * s**es for rationals on the 1/8 grid."""
        er, es = Fraction(er) * 8, Fraction(es) * 8
        if er.denominator != 1 or es.denominator != 1:
            raise ValueError("power leaves the p,q grid")
        return self.mono(1, int(er), int(es))

    def qnum(self, n):
        """The bracket number (r**n - s**n)/(r - s), n rational, 8n integral."""
        n = Fraction(n)
        e = n * 8
        if e.denominator != 1:
            raise ValueError("bracket number argument off the 1/8 grid")
        e = int(e)
        if e == 0:
            return self.zero
        return Scalar({(e, 0): Fraction(1), (0, e): Fraction(-1)},
                      {(8, 0): Fraction(1), (0, 8): Fraction(-1)})

    def qnum_rel(self, k, d):
        """Relative bracket (r**(k*d) - s**(k*d))/(r**d - s**d)."""
        k, d = Fraction(k), Fraction(d)
        ekd, ed = k * d * 8, d * 8
        if ekd.denominator != 1 or ed.denominator != 1:
            raise ValueError("relative bracket off the 1/8 grid")
        ekd, ed = int(ekd), int(ed)
        if ekd == 0:
            return self.zero
        return Scalar({(ekd, 0): Fraction(1), (0, ekd): Fraction(-1)},
                      {(ed, 0): Fraction(1), (0, ed): Fraction(-1)})


class NumericField:
    """Element factory evaluating everything at a rational point (p0, q0).

    The standing nondegeneracy assumption r != +-s translates to
    p0**8 != +-q0**8 and is enforced here.
    """

    symbolic = False

    def __init__(self, p0, q0):
        p0, q0 = Fraction(p0), Fraction(q0)
        if p0 == 0 or q0 == 0:
            raise ValueError("p0, q0 must be nonzero")
        if p0 ** 8 == q0 ** 8 or p0 ** 8 == -q0 ** 8:
            raise ValueError("degenerate point: p0**8 == +-q0**8")
        self.p0, self.q0 = p0, q0
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def rational(self, c):
        return Fraction(c)

    def mono(self, coeff=1, ep=0, eq=0):
        return Fraction(coeff) * self.p0 ** int(ep) * self.q0 ** int(eq)

    def monomial(self, m):
        return self.mono(m.coeff, m.ep, m.eq)

    def rs_pow(self, er, es):
        er, es = Fraction(er) * 8, Fraction(es) * 8
        if er.denominator != 1 or es.denominator != 1:
            raise ValueError("power leaves the p,q grid")
        return self.p0 ** int(er) * self.q0 ** int(es)

    def qnum(self, n):
        n = Fraction(n)
        e = n * 8
        if e.denominator != 1:
            raise ValueError("bracket number argument off the 1/8 grid")
        e = int(e)
        if e == 0:
            return Fraction(0)
        return ((self.p0 ** e - self.q0 ** e)
                / (self.p0 ** 8 - self.q0 ** 8))

    def qnum_rel(self, k, d):
        k, d = Fraction(k), Fraction(d)
        ekd, ed = k * d * 8, d * 8
        if ekd.denominator != 1 or ed.denominator != 1:
            raise ValueError("relative bracket off the 1/8 grid")
        ekd, ed = int(ekd), int(ed)
        if ekd == 0:
            return Fraction(0)
        return ((self.p0 ** ekd - self.q0 ** ekd)
                / (self.p0 ** ed - self.q0 ** ed))
