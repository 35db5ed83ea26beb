"""Truncated formal series in one variable over an exact coefficient field,
the deformed binomial family, and the series/polynomial identity checks that
the operator suites lean on.

Truncation is explicit: coefficients above the order bound are unknown, not
zero, and arithmetic propagates the bound conservatively.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Monomial


class TruncatedSeries:
    """Finite map exponent -> coefficient, valid up to ``order`` inclusive."""

    __slots__ = ("field", "coeffs", "order")

    def __init__(self, field, coeffs, order):
        self.field = field
        self.coeffs = {e: c for e, c in coeffs.items() if c != field.zero}
        self.order = order
        assert all(e <= order for e in self.coeffs)

    @staticmethod
    def const(field, c, order):
        return TruncatedSeries(field, {0: field.rational(1) * c}, order)

    @staticmethod
    def one(field, order):
        return TruncatedSeries(field, {0: field.one}, order)

    def coeff(self, e):
        if e > self.order:
            raise ValueError("coefficient %d beyond truncation order" % e)
        return self.coeffs.get(e, self.field.zero)

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else self.order + 1

    def __add__(self, other):
        order = min(self.order, other.order)
        out = dict((e, c) for e, c in self.coeffs.items() if e <= order)
        for e, c in other.coeffs.items():
            if e <= order:
                out[e] = out.get(e, self.field.zero) + c
        return TruncatedSeries(self.field, out, order)

    def __neg__(self):
        return TruncatedSeries(self.field,
                               {e: -c for e, c in self.coeffs.items()},
                               self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            # a factor is exact from its lowest exponent up to its order,
            # so the product is trusted up to min(Na + lb, Nb + la)
            order = min(self.order + other.min_exp(),
                        other.order + self.min_exp())
            out = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = e1 + e2
                    if e <= order:
                        out[e] = out.get(e, self.field.zero) + c1 * c2
            return TruncatedSeries(self.field, out, order)
        # scalar multiple
        return TruncatedSeries(self.field,
                               {e: c * other for e, c in self.coeffs.items()},
                               self.order)

    __rmul__ = __mul__

    def __eq__(self, other):
        order = min(self.order, other.order)
        a = {e: c for e, c in self.coeffs.items() if e <= order}
        b = {e: c for e, c in other.coeffs.items() if e <= order}
        return a == b

    def __repr__(self):
        terms = ["(%r) z^%d" % (c, e) for e, c in sorted(self.coeffs.items())]
        return " + ".join(terms) + " + O(z^%d)" % (self.order + 1) \
            if terms else "O(z^%d)" % (self.order + 1)


def exp_series(a, order=None):
    """exp of a series with zero constant term and no negative exponents."""
    if order is None:
        order = a.order
    if a.min_exp() < 1:
        raise ValueError("exp needs a series with zero constant term")
    field = a.field
    # E = exp(a) satisfies E' = a' E, i.e. n E_n = sum_k k a_k E_{n-k}
    out = {0: field.one}
    for n in range(1, order + 1):
        acc = field.zero
        for k, ak in a.coeffs.items():
            if k <= n and n - k in out:
                acc = acc + (k * ak) * out[n - k]
        if acc != field.zero:
            out[n] = field.rational(Fraction(1, n)) * acc
    return TruncatedSeries(field, out, order)


def deformed_binomial(field, c, a, order):
    """The series exp(-sum_{n>=1} [a*n]/(n*[n]) * (c z)**n) to the given order.

    ``c`` is a pure p,q-monomial (or 1) and ``a`` is rational on the 1/2 grid.
    For a = 1 this is exactly 1 - cz; for a = -1 it is the geometric series in
    (rs)**-1 * cz.
    """
    a = Fraction(a)
    if isinstance(c, (int, Fraction)):
        c = Monomial(c)
    body = {}
    for n in range(1, order + 1):
        num = field.qnum(a * n)
        if num == field.zero:
            continue
        coeff = -num / (n * field.qnum(n)) * field.monomial(c.pow(n))
        body[n] = coeff
    return exp_series(TruncatedSeries(field, body, order))


def geometric(field, c, order):
    """(1 - cz)**-1 = sum_n (cz)**n for a monomial c."""
    if isinstance(c, (int, Fraction)):
        c = Monomial(c)
    return TruncatedSeries(
        field, {n: field.monomial(c.pow(n)) for n in range(order + 1)}, order)


def linear(field, c, order):
    """1 - cz for a monomial or rational c."""
    if isinstance(c, (int, Fraction)):
        c = Monomial(c) if c else None
    coeffs = {0: field.one}
    if c is not None:
        coeffs[1] = -field.monomial(c)
    return TruncatedSeries(field, coeffs, order)


def check_deformed_binomial_family(field, order):
    """Verify the closed forms and product identities of the deformed
    binomial family to the given order.  Returns {identity name: bool}."""
    h = Fraction(1, 2)
    rs34 = Monomial(1, 6, 6)        # (rs)^{3/4}
    rs14 = Monomial(1, 2, 2)        # (rs)^{1/4}
    ris12 = Monomial(1, -4, 4)      # (r^{-1}s)^{1/2}
    rsi12 = Monomial(1, 4, -4)      # (rs^{-1})^{1/2}
    results = {}

    # closed form at a = 1: exactly 1 - z
    results["binomial_a1"] = deformed_binomial(field, 1, 1, order) == \
        linear(field, 1, order)
    # closed form at a = -1: geometric series in (rs)^{-1} z
    results["binomial_a_minus1"] = deformed_binomial(field, 1, -1, order) == \
        geometric(field, Monomial(1, -8, -8), order)

    # product collapsing to a plain geometric factor
    lhs = deformed_binomial(field, rs34, -h, order) * \
        deformed_binomial(field, rs34 * ris12, -h, order)
    results["halves_to_geometric"] = \
        lhs * linear(field, Monomial(1, -2, 2), order) == \
        TruncatedSeries.one(field, order)

    # product equal to a ratio of two linear factors
    lhs = deformed_binomial(field, rs14 * rsi12, h, order) * \
        deformed_binomial(field, rs34 * ris12, -h, order)
    results["halves_to_ratio"] = \
        lhs * linear(field, Monomial(1, -2, 2), order) == \
        linear(field, Monomial(1, 2, -2), order)

    # inverse-pair product equal to 1, for a generic monomial argument
    ok = True
    for a in (Monomial(1), Monomial(1, 1, 1), Monomial(1, -3, 5)):
        lhs = deformed_binomial(field, rs14 * a, h, order) * \
            deformed_binomial(field, rs34 * a, -h, order)
        ok = ok and lhs == TruncatedSeries.one(field, order)
    results["half_pair_cancels"] = ok

    # two half-binomials merging into one linear factor (s variant)
    lhs = deformed_binomial(field, rs14 * Monomial(1, -4, -4), h, order) * \
        deformed_binomial(field, rs14 * Monomial(1, 0, -8), h, order)
    results["halves_merge_s"] = lhs == \
        linear(field, Monomial(1, -2, -6), order)

    # r variant
    lhs = deformed_binomial(field, rs14 * Monomial(1, -4, -4), h, order) * \
        deformed_binomial(field, rs14 * Monomial(1, -8, 0), h, order)
    results["halves_merge_r"] = lhs == \
        linear(field, Monomial(1, -6, -2), order)

    return results


# ---------------------------------------------------------------------------
# small three-variable polynomial layer (z1, z2, w), degree <= 2 per variable


class Poly3:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if c != field.zero:
                    self.coeffs[k] = c

    @staticmethod
    def var(field, idx, scale=None):
        key = tuple(1 if i == idx else 0 for i in range(3))
        return Poly3(field, {key: scale if scale is not None else field.one})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, self.field.zero) + c
        return Poly3(self.field, out)

    def __neg__(self):
        return Poly3(self.field, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly3):
            out = {}
            for k1, c1 in self.coeffs.items():
                for k2, c2 in other.coeffs.items():
                    k = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                    out[k] = out.get(k, self.field.zero) + c1 * c2
            return Poly3(self.field, out)
        return Poly3(self.field,
                     {k: c * other for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.coeffs == other.coeffs


def check_symmetrizer_kernel(field, t):
    """Verify the three-term factorization identity used to collapse the
    cubic symmetrized contraction: for invertible t,

    (z1 - t w)(z2 - t w) + (t + 1/t)(z1 - t w)(w - t z2)
        + (w - t z1)(w - t z2)  ==  (1/t - t) w (z1 - t**2 z2).
    """
    if t == field.zero:
        raise ValueError("t must be nonzero")
    z1 = Poly3.var(field, 0)
    z2 = Poly3.var(field, 1)
    w = Poly3.var(field, 2)
    tw = Poly3.var(field, 2, t)
    ti = field.one / t
    lhs = (z1 - tw) * (z2 - tw) \
        + (t + ti) * ((z1 - tw) * (w - t * z2)) \
        + (w - t * z1) * (w - t * z2)
    rhs = (ti - t) * (w * (z1 - (t * t) * z2))
    return lhs == rhs
