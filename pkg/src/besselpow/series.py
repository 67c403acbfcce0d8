"""Truncated power series over an exact field in the variable w = (z/2)^2.

The series here are the brute-force oracle for everything else in the
package: powers are taken either by repeated Cauchy products or by the
O(N^2) arbitrary-exponent recurrence, and log/exp run as first-order ODE
recurrences so no intermediate composition blows up.

The expansions being modeled are even in z, so the series variable is
w = (z/2)^2 rather than z; a coefficient of z^(2p) in the literature
corresponds to 4^p times the coefficient of w^p here.
"""

from __future__ import annotations

from fractions import Fraction

from .coefficients import factorial, pochhammer
from .fields import (
    TAG_RATFUNC,
    TAG_RATIONAL,
    DomainError,
    FieldTagError,
    RatFunc,
    as_field,
    coerce_field,
    field_one,
    field_tag,
    field_to_json,
    field_zero,
    is_integer_value,
)
from .rpoly import RPoly

__all__ = [
    "SYMBOLIC_R",
    "TruncSeries",
    "series_mul",
    "bessel_series",
    "series_log",
    "series_exp",
    "euler_pow",
]


class _SymbolicR:
    """Sentinel selecting the symbolic-exponent variant of euler_pow."""

    def __repr__(self):
        return "SYMBOLIC_R"


SYMBOLIC_R = _SymbolicR()


def _ring_tag(value) -> str:
    if isinstance(value, RPoly):
        return f"rpoly/{value.tag}"
    return field_tag(value)


class TruncSeries:
    """Truncated series: coefficient k is the coefficient of w^k.

    ``coeffs`` always has length order+1; higher terms are unknown, not
    zero.  Binary operations demand matching coefficient rings and
    truncate to the smaller order.
    """

    __slots__ = ("coeffs", "tag")

    def __init__(self, coeffs, tag: str | None = None):
        vals = [c if isinstance(c, RPoly) else as_field(c) for c in coeffs]
        if not vals:
            raise DomainError("a truncated series needs at least its constant term")
        if tag is None:
            tag = _ring_tag(vals[0])
            for v in vals[1:]:
                t = _ring_tag(v)
                if t != tag:
                    if {t, tag} == {TAG_RATIONAL, TAG_RATFUNC}:
                        tag = TAG_RATFUNC
                    else:
                        raise FieldTagError(f"mixed series coefficients: {tag} vs {t}")
        if not tag.startswith("rpoly/"):
            vals = [coerce_field(v, tag) for v in vals]
        object.__setattr__(self, "coeffs", tuple(vals))
        object.__setattr__(self, "tag", tag)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _zero(self):
        if self.tag.startswith("rpoly/"):
            return RPoly.zero(self.tag.split("/", 1)[1])
        return field_zero(self.tag)

    def _one(self):
        if self.tag.startswith("rpoly/"):
            return RPoly.one(self.tag.split("/", 1)[1])
        return field_one(self.tag)

    def truncate(self, order: int) -> TruncSeries:
        if order >= self.order:
            return self
        return TruncSeries(self.coeffs[: order + 1], self.tag)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.tag == other.tag and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("TruncSeries", self.tag, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r})"

    def to_json(self):
        if self.tag.startswith("rpoly/"):
            payload = [c.to_json() for c in self.coeffs]
        else:
            payload = [field_to_json(c) for c in self.coeffs]
        return {"order": self.order, "coeffs": payload}


def _check_tags(f: TruncSeries, g: TruncSeries) -> None:
    if f.tag != g.tag:
        raise FieldTagError(f"mixed series rings: {f.tag} vs {g.tag}")


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the smaller operand order."""
    _check_tags(f, g)
    order = min(f.order, g.order)
    out = []
    for n in range(order + 1):
        acc = f._zero()
        for i in range(n + 1):
            acc = acc + f.coeffs[i] * g.coeffs[n - i]
        out.append(acc)
    return TruncSeries(out, f.tag)


def bessel_series(nu, order: int) -> TruncSeries:
    """Normalized Bessel series in w: coefficient k is 1/(k! (nu+1)_k).

    The constant term is 1.  A concrete nu that is a negative integer
    makes a Pochhammer factor vanish and is rejected.
    """
    if order < 0:
        raise DomainError("series order must be nonnegative")
    nu = as_field(nu)
    tag = field_tag(nu)
    one = field_one(tag)
    coeffs = [one]
    rising = one  # (nu+1)_k, updated incrementally
    for k in range(1, order + 1):
        rising = rising * (nu + k)
        if rising == 0:
            raise DomainError(
                f"normalized Bessel series undefined: (nu+1)_{k} vanishes at nu = {nu}"
            )
        coeffs.append(one / (rising * factorial(k)))
    return TruncSeries(coeffs, tag)


def series_log(f: TruncSeries) -> TruncSeries:
    """Logarithm of a series with constant term 1, to the same order.

    Runs the coefficient recurrence of f * (log f)' = f'.
    """
    if f.coeffs[0] != f._one():
        raise DomainError("series_log requires constant term 1")
    n_max = f.order
    zero = f._zero()
    g = [zero]
    for n in range(1, n_max + 1):
        # n*g_n = n*c_n - sum_{j=1}^{n-1} j * g_j * c_{n-j}
        acc = f.coeffs[n] * n
        for j in range(1, n):
            acc = acc - g[j] * j * f.coeffs[n - j]
        g.append(acc * Fraction(1, n))
    return TruncSeries(g, f.tag)


def series_exp(f: TruncSeries) -> TruncSeries:
    """Exponential of a series with constant term 0, to the same order."""
    if f.coeffs[0] != f._zero():
        raise DomainError("series_exp requires constant term 0")
    n_max = f.order
    out = [f._one()]
    for n in range(1, n_max + 1):
        # n*e_n = sum_{j=0}^{n-1} e_j * (n-j) * f_{n-j}
        acc = f._zero()
        for j in range(n):
            acc = acc + out[j] * (n - j) * f.coeffs[n - j]
        out.append(acc * Fraction(1, n))
    return TruncSeries(out, f.tag)


def euler_pow(f: TruncSeries, r) -> TruncSeries:
    """Coefficients of f^r by the arbitrary-exponent recurrence.

    d_n = (1/c_0) * sum_{k=1..n} (k(r+1)/n - 1) c_k d_{n-k}

    ``r`` may be a field value or :data:`SYMBOLIC_R`; in the symbolic
    case every output coefficient is a polynomial in r of degree <= n,
    and the constant term of ``f`` must be exactly 1 so the recurrence
    stays inside the polynomial ring.
    """
    if f.tag.startswith("rpoly/"):
        raise FieldTagError("euler_pow input coefficients must be field values")
    c = f.coeffs
    if c[0] == 0:
        raise DomainError("euler_pow requires a nonzero constant term")
    if isinstance(r, _SymbolicR):
        return _euler_pow_symbolic(f)
    r = coerce_field(as_field(r), f.tag)
    if c[0] == field_one(f.tag):
        d = [field_one(f.tag)]
    elif is_integer_value(r):
        k = int(coerce_field(r, TAG_RATIONAL))
        d = [c[0] ** k if k >= 0 else (field_one(f.tag) / c[0]) ** (-k)]
    else:
        raise DomainError(
            "non-integer exponent needs constant term 1 to stay in the field"
        )
    inv_c0 = field_one(f.tag) / c[0]
    r1 = r + 1
    for n in range(1, f.order + 1):
        acc = field_zero(f.tag)
        for k in range(1, n + 1):
            weight = r1 * Fraction(k, n) - 1
            acc = acc + weight * c[k] * d[n - k]
        d.append(acc * inv_c0)
    return TruncSeries(d, f.tag)


def _euler_pow_symbolic(f: TruncSeries) -> TruncSeries:
    tag = f.tag
    if f.coeffs[0] != field_one(tag):
        raise DomainError("symbolic exponent requires constant term exactly 1")
    d = [RPoly.one(tag)]
    for n in range(1, f.order + 1):
        acc = RPoly.zero(tag)
        for k in range(1, n + 1):
            # k(r+1)/n - 1 as a linear polynomial in r
            weight = RPoly([Fraction(k - n, n), Fraction(k, n)], tag)
            acc = acc + weight * d[n - k] * f.coeffs[k]
        d.append(acc)
    return TruncSeries(d, f"rpoly/{tag}")
