"""Polynomials in the exponent variable r over an exact coefficient field.

These carry the central polynomial family of the package (degree-n
polynomials whose value at a nonnegative integer r gives the n-th series
coefficient of the r-th power of the normalized Bessel series).  All
coefficients of one polynomial share a single field tag.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import (
    TAG_RATFUNC,
    TAG_RATIONAL,
    FieldTagError,
    RatFunc,
    as_field,
    coerce_field,
    field_tag,
    field_to_json,
    field_zero,
    format_field,
    rational_to_str,
)

__all__ = ["RPoly", "lagrange_interpolate"]


def _common_tag(values, tag=None) -> str:
    found = tag
    for v in values:
        t = field_tag(v)
        if found is None or (found == TAG_RATIONAL and t == TAG_RATFUNC):
            found = t
    return found or TAG_RATIONAL


class RPoly:
    """Dense polynomial in r, ascending coefficients, exact field scalars."""

    __slots__ = ("coeffs", "tag")

    def __init__(self, coeffs=(), tag: str | None = None):
        vals = [as_field(c) for c in coeffs]
        tag = _common_tag(vals, tag)
        vals = [coerce_field(v, tag) for v in vals]
        while vals and vals[-1] == 0:
            vals.pop()
        object.__setattr__(self, "coeffs", tuple(vals))
        object.__setattr__(self, "tag", tag)

    def __setattr__(self, name, value):
        raise AttributeError("RPoly is immutable")

    @classmethod
    def zero(cls, tag: str = TAG_RATIONAL) -> RPoly:
        return cls((), tag)

    @classmethod
    def one(cls, tag: str = TAG_RATIONAL) -> RPoly:
        return cls((1,), tag)

    @classmethod
    def var(cls, tag: str = TAG_RATIONAL) -> RPoly:
        """The polynomial r itself."""
        return cls((0, 1), tag)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return field_zero(self.tag)

    def constant_term(self):
        return self.coefficient(0)

    def __eq__(self, other):
        if isinstance(other, RPoly):
            if self.tag != other.tag:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RatFunc)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == coerce_field(
                as_field(other), self.tag
            )
        return NotImplemented

    def __hash__(self):
        return hash(("RPoly", self.tag, self.coeffs))

    def __repr__(self):
        return f"RPoly({list(self.coeffs)!r}, tag={self.tag!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            var = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
            if var and c == 1:
                parts.append(var)
                continue
            rendered = format_field(c)
            if "/" in rendered or " " in rendered:
                rendered = f"({rendered})"
            parts.append(f"{rendered}*{var}" if var else rendered)
        return " + ".join(parts)

    # -- arithmetic ----------------------------------------------------------

    def _join_tag(self, other: RPoly) -> str:
        if self.tag == other.tag:
            return self.tag
        raise FieldTagError(f"mixed coefficient fields: {self.tag} vs {other.tag}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = RPoly([as_field(other)], tag=self.tag)
        if not isinstance(other, RPoly):
            return NotImplemented
        tag = self._join_tag(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return RPoly(out, tag)

    __radd__ = __add__

    def __neg__(self):
        return RPoly([-c for c in self.coeffs], self.tag)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = RPoly([as_field(other)], tag=self.tag)
        if not isinstance(other, RPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            scalar = coerce_field(as_field(other), self.tag)
            if scalar == 0:
                return RPoly.zero(self.tag)
            return RPoly([c * scalar for c in self.coeffs], self.tag)
        if not isinstance(other, RPoly):
            return NotImplemented
        tag = self._join_tag(other)
        if not self.coeffs or not other.coeffs:
            return RPoly.zero(tag)
        out = [field_zero(tag)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return RPoly(out, tag)

    __rmul__ = __mul__

    def evaluate(self, x):
        """Horner evaluation at a field value (scalars embed as needed)."""
        x = coerce_field(as_field(x), self.tag)
        acc = field_zero(self.tag)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return [field_to_json(c) for c in self.coeffs]

    def pretty(self) -> str:
        return str(self)


def lagrange_interpolate(nodes, values, tag: str) -> RPoly:
    """Exact interpolation through distinct rational nodes.

    The basis polynomials have rational coefficients, so the result lives
    in the same field as the supplied values.
    """
    if len(nodes) != len(values):
        raise ValueError("nodes and values must have equal length")
    xs = [Fraction(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = RPoly.zero(tag)
    for i, (xi, yi) in enumerate(zip(xs, values)):
        basis = RPoly.one(TAG_RATIONAL)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * RPoly([-xj, 1])
            denom *= xi - xj
        scaled = RPoly(
            [coerce_field(c / denom, tag) for c in basis.coeffs], tag
        )
        result = result + scaled * coerce_field(as_field(yi), tag)
    return result
