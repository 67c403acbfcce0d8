"""Exact arithmetic kernel: rationals, polynomials in nu, and the field Q(nu).

Every quantity in this package lives in one of two exact coefficient
fields: the rationals Q (``fractions.Fraction``) or the rational-function
field Q(nu) (:class:`RatFunc`).  A *field value* is a value of either
kind; the helpers at the bottom of this module tag, coerce, serialize
and parse them.

Polynomials in the order parameter nu are dense ascending coefficient
lists (:class:`NuPoly`).  Rational functions are kept in canonical
reduced form -- monic denominator, gcd(num, den) = 1 -- so equality of
canonical forms is syntactic.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "DomainError",
    "FieldTagError",
    "ConsistencyError",
    "NuPoly",
    "RatFunc",
    "NU",
    "TAG_RATIONAL",
    "TAG_RATFUNC",
    "field_tag",
    "coerce_field",
    "ensure_same_tag",
    "field_zero",
    "field_one",
    "as_field",
    "is_integer_value",
    "rational_to_str",
    "rational_from_str",
    "field_to_json",
    "field_from_json",
    "format_field",
    "poly_str",
]


class DomainError(ValueError):
    """A precondition was violated (index range, pole, zero division...)."""


class FieldTagError(DomainError):
    """Two values from different coefficient fields were mixed."""


class ConsistencyError(RuntimeError):
    """An internal cross-check that must hold mathematically failed."""


# --------------------------------------------------------------------------
# integer polynomial helpers (gcd machinery works on primitive int lists)
# --------------------------------------------------------------------------

# Large primes used for the "gcd is 1" certificate: if the gcd of two
# integer polynomials reduces to a constant modulo a prime not dividing
# both leading coefficients, the rational gcd is 1.  Results never depend
# on the certificate alone; nontrivial gcds always go through the exact
# subresultant remainder sequence.
_CERT_PRIMES = (2305843009213693951, 4611686018427387847, 2147483647, 1000000007)

# Integer root candidates tried during deflation.  The structured
# denominators in this package only ever contain factors nu + k with
# small positive k, so a modest window captures them all; anything it
# misses is still handled exactly by the PRS fallback.
_ROOT_BOUND = 72


def _strip_int(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _int_content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g or 1


def _primitive(p: list[int]) -> list[int]:
    g = _int_content(p)
    if p and p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _int_eval(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _deflate_root(p: list[int], m: int) -> list[int]:
    """Exact division of ``p`` by (nu - m); caller guarantees p(m) == 0."""
    n = len(p) - 1
    q = [0] * n
    acc = p[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = p[i] + acc * m
    if acc != 0:
        raise ConsistencyError("deflation by a non-root")
    return q


def _small_integer_roots(p: list[int]) -> list[int]:
    roots = []
    for m in range(-_ROOT_BOUND, _ROOT_BOUND + 1):
        if _int_eval(p, m) == 0:
            roots.append(m)
    return roots


def _gf_gcd_degree(a: list[int], b: list[int], p: int) -> int | None:
    """Degree of gcd(a, b) mod p, or None when p is unusable."""
    if a[-1] % p == 0 or b[-1] % p == 0:
        return None
    A = _strip_int([c % p for c in a])
    B = _strip_int([c % p for c in b])
    while B:
        inv = pow(B[-1], p - 2, p)
        dB = len(B) - 1
        for i in range(len(A) - len(B), -1, -1):
            f = A[i + dB] * inv % p
            if f:
                for j in range(dB + 1):
                    A[i + j] = (A[i + j] - f * B[j]) % p
        A = _strip_int(A)
        A, B = B, A
    return len(A) - 1


def _pseudo_rem(A: list[int], B: list[int]) -> list[int]:
    """lc(B)^(deg A - deg B + 1) * A mod B over the integers."""
    dB = len(B) - 1
    lB = B[-1]
    R = A[:]
    e = len(A) - 1 - dB + 1
    while True:
        R = _strip_int(R)
        dR = len(R) - 1
        if not R or dR < dB:
            break
        mult = R[-1]
        R = [lB * c for c in R]
        off = dR - dB
        for j in range(dB + 1):
            R[off + j] -= mult * B[j]
        e -= 1
    if e > 0:
        s = lB**e
        R = [s * c for c in R]
    return _strip_int(R)


def _subresultant_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two nonzero primitive integer polynomials."""
    if len(a) < len(b):
        a, b = b, a
    g = h = 1
    while True:
        d = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            return _primitive(b)
        if len(r) == 1:
            return [1]
        a, b = b, [c // (g * h**d) for c in r]
        g = a[-1]
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = g**d // h ** (d - 1)


def _int_gcd_poly(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of primitive int polynomials, with fast paths.

    Common linear factors with small integer roots are split off by
    deflation first; a mod-p certificate then settles the (typical)
    coprime remainder without running the full remainder sequence.
    """
    common: list[int] = [1]
    if len(a) > 2 and len(b) > 2:
        probe = a if len(a) <= len(b) else b
        for m in _small_integer_roots(probe):
            while _int_eval(a, m) == 0 and _int_eval(b, m) == 0:
                a = _deflate_root(a, m)
                b = _deflate_root(b, m)
                # common *= (nu - m)
                common = _strip_int(
                    [-m * common[0]]
                    + [common[i] - m * common[i + 1] for i in range(len(common) - 1)]
                    + [common[-1]]
                )
                if len(a) == 1 or len(b) == 1:
                    return common
    if len(a) == 1 or len(b) == 1:
        return common
    for p in _CERT_PRIMES:
        deg = _gf_gcd_degree(a, b, p)
        if deg is not None:
            if deg == 0:
                return common
            break
    rest = _subresultant_gcd(a, b)
    if rest == [1]:
        return common
    if common == [1]:
        return rest
    prod = [0] * (len(common) + len(rest) - 1)
    for i, x in enumerate(common):
        for j, y in enumerate(rest):
            prod[i + j] += x * y
    return prod


# --------------------------------------------------------------------------
# polynomials in nu over Q
# --------------------------------------------------------------------------


class NuPoly:
    """Dense polynomial in nu over Q; ascending coefficients, nu^0 first.

    Immutable.  The trailing (highest-degree) coefficient is nonzero
    unless the polynomial is zero, which is stored as the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("NuPoly is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, NuPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(("NuPoly", self.coeffs))

    def __repr__(self):
        return f"NuPoly({list(self.coeffs)!r})"

    def __str__(self):
        return poly_str(self.coeffs, "nu")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return NuPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return NuPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, NuPoly):
            if not self.coeffs or not other.coeffs:
                return _NUPOLY_ZERO
            a, da = self._int_scaled()
            b, db = other._int_scaled()
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            scale = da * db
            return NuPoly([Fraction(v, scale) for v in out])
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _NUPOLY_ZERO
            return NuPoly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result = _NUPOLY_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _int_scaled(self) -> tuple[list[int], int]:
        """Clear denominators: (integer coefficient list, positive scale)."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c.numerator) * (den // c.denominator) for c in self.coeffs], den

    def _coerce(self, other):
        if isinstance(other, NuPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return NuPoly([other])
        return NotImplemented

    # -- evaluation and division --------------------------------------------

    def evaluate(self, x):
        """Horner evaluation at a Fraction, RatFunc or other ring element."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: NuPoly) -> tuple[NuPoly, NuPoly]:
        if other.is_zero:
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        quo = [Fraction(0)] * max(len(rem) - db, 0)
        inv = 1 / other.lc()
        for i in range(len(rem) - db - 1, -1, -1):
            f = rem[i + db] * inv
            if f:
                quo[i] = f
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= f * c
        return NuPoly(quo), NuPoly(rem)

    def exact_div(self, other: NuPoly) -> NuPoly:
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ConsistencyError("inexact polynomial division")
        return q

    def monic(self) -> NuPoly:
        if self.is_zero or self.lc() == 1:
            return self
        inv = 1 / self.lc()
        return NuPoly([c * inv for c in self.coeffs])

    def gcd(self, other: NuPoly) -> NuPoly:
        """Monic gcd over Q."""
        if self.is_zero:
            return other.monic()
        if other.is_zero:
            return self.monic()
        if not self.coeffs[1:] or not other.coeffs[1:]:
            return _NUPOLY_ONE
        a = _primitive(self._int_scaled()[0])
        b = _primitive(other._int_scaled()[0])
        return NuPoly(_int_gcd_poly(a, b)).monic()

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> NuPoly:
        return cls([rational_from_str(s) for s in data])


_NUPOLY_ZERO = NuPoly(())
_NUPOLY_ONE = NuPoly((1,))


# --------------------------------------------------------------------------
# the rational-function field Q(nu)
# --------------------------------------------------------------------------


class RatFunc:
    """Reduced rational function of nu: num/den with den monic, gcd = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_NUPOLY_ONE):
        num = _as_nupoly(num)
        den = _as_nupoly(den)
        if den.is_zero:
            raise DomainError("rational function with zero denominator")
        if num.is_zero:
            object.__setattr__(self, "num", _NUPOLY_ZERO)
            object.__setattr__(self, "den", _NUPOLY_ONE)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.lc()
        if lead != 1:
            inv = 1 / lead
            num = num * inv
            den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _raw(cls, num: NuPoly, den: NuPoly) -> RatFunc:
        """Trusted constructor: caller guarantees canonical form."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_rational(self) -> Fraction:
        if not self.is_constant():
            raise DomainError("rational function is not a constant")
        if self.num.is_zero:
            return Fraction(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, NuPoly)):
            o = _as_nupoly(other)
            return self.den == _NUPOLY_ONE and self.num == o
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            # constants hash like their rational value
            return hash(self.as_rational())
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == _NUPOLY_ONE:
            return poly_str(self.num.coeffs, "nu")
        return "({})/({})".format(
            poly_str(self.num.coeffs, "nu"), poly_str(self.den.coeffs, "nu")
        )

    # -- field operations (Henrici-style gcd placement) ----------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, NuPoly)):
            return RatFunc(_as_nupoly(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g = d1.gcd(d2)
        if g.degree <= 0:
            num = n1 * d2 + n2 * d1
            den = d1 * d2
            return RatFunc._raw(*_monic_pair(num, den))
        d1r = d1.exact_div(g)
        d2r = d2.exact_div(g)
        t = n1 * d2r + n2 * d1r
        h = t.gcd(g)
        if h.degree > 0:
            t = t.exact_div(h)
            den = d1r * d2.exact_div(h)
        else:
            den = d1r * d2
        return RatFunc._raw(*_monic_pair(t, den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _RATFUNC_ZERO
            return RatFunc._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return _RATFUNC_ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g1 = n1.gcd(d2)
        if g1.degree > 0:
            n1 = n1.exact_div(g1)
            d2 = d2.exact_div(g1)
        g2 = n2.gcd(d1)
        if g2.degree > 0:
            n2 = n2.exact_div(g2)
            d1 = d1.exact_div(g2)
        return RatFunc._raw(*_monic_pair(n1 * n2, d1 * d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DomainError("division by zero in Q(nu)")
        return self * RatFunc._raw(*_monic_pair(other.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero:
                raise DomainError("division by zero in Q(nu)")
            return (_RATFUNC_ONE / self) ** (-n)
        result = _RATFUNC_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, x: Fraction) -> Fraction:
        """Value at a concrete rational nu; raises DomainError at a pole."""
        x = Fraction(x)
        d = self.den.evaluate(x)
        if d == 0:
            raise DomainError(f"pole of rational function at nu = {x}")
        return self.num.evaluate(x) / d

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> RatFunc:
        return cls(NuPoly.from_json(data["num"]), NuPoly.from_json(data["den"]))


def _as_nupoly(v) -> NuPoly:
    if isinstance(v, NuPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return NuPoly([v])
    raise TypeError(f"cannot interpret {type(v).__name__} as a polynomial in nu")


def _monic_pair(num: NuPoly, den: NuPoly) -> tuple[NuPoly, NuPoly]:
    lead = den.lc()
    if lead != 1:
        inv = 1 / lead
        num = num * inv
        den = den * inv
    return num, den


_RATFUNC_ZERO = RatFunc._raw(_NUPOLY_ZERO, _NUPOLY_ONE)
_RATFUNC_ONE = RatFunc._raw(_NUPOLY_ONE, _NUPOLY_ONE)

#: The symbolic order parameter nu as a field value in Q(nu).
NU = RatFunc._raw(NuPoly((0, 1)), _NUPOLY_ONE)


# --------------------------------------------------------------------------
# field values: tagged union Rational | RatFunc
# --------------------------------------------------------------------------

TAG_RATIONAL = "rational"
TAG_RATFUNC = "ratfunc"


def field_tag(v) -> str:
    if isinstance(v, (Fraction, int)):
        return TAG_RATIONAL
    if isinstance(v, RatFunc):
        return TAG_RATFUNC
    raise TypeError(f"not a field value: {type(v).__name__}")


def coerce_field(v, tag: str):
    """Coerce a scalar into the field named by ``tag``.

    Rationals embed in Q(nu); the reverse direction is only allowed for
    constant rational functions.
    """
    if tag == TAG_RATIONAL:
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, Fraction):
            return v
        if isinstance(v, RatFunc) and v.is_constant():
            return v.as_rational()
        raise FieldTagError("cannot demote a nu-dependent value to Q")
    if tag == TAG_RATFUNC:
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFunc(NuPoly([v]))
        raise FieldTagError(f"cannot coerce {type(v).__name__} into Q(nu)")
    raise ValueError(f"unknown field tag {tag!r}")


def ensure_same_tag(a, b) -> str:
    ta, tb = field_tag(a), field_tag(b)
    if ta != tb:
        raise FieldTagError(f"mixed coefficient fields: {ta} vs {tb}")
    return ta


def field_zero(tag: str):
    return Fraction(0) if tag == TAG_RATIONAL else _RATFUNC_ZERO


def field_one(tag: str):
    return Fraction(1) if tag == TAG_RATIONAL else _RATFUNC_ONE


def as_field(v):
    """Normalize ints to Fraction, leave Fraction/RatFunc untouched."""
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, RatFunc)):
        return v
    raise TypeError(f"not a field value: {type(v).__name__}")


def is_integer_value(v) -> bool:
    v = as_field(v)
    if isinstance(v, Fraction):
        return v.denominator == 1
    return v.is_constant() and v.as_rational().denominator == 1


# --------------------------------------------------------------------------
# serialization and rendering
# --------------------------------------------------------------------------


def rational_to_str(q) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(q))


def rational_from_str(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"invalid rational literal {s!r}") from exc


def field_to_json(v):
    v = as_field(v)
    if isinstance(v, Fraction):
        return rational_to_str(v)
    return v.to_json()


def field_from_json(data):
    if isinstance(data, str):
        return rational_from_str(data)
    if isinstance(data, dict) and "num" in data and "den" in data:
        return RatFunc.from_json(data)
    raise DomainError(f"unrecognized field value payload: {data!r}")


def poly_str(coeffs, var: str) -> str:
    """Deterministic ascending rendering, e.g. ``1 - 1/2*nu + nu^2``."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            body = rational_to_str(c)
        else:
            v = var if k == 1 else f"{var}^{k}"
            if c == 1:
                body = v
            elif c == -1:
                body = f"-{v}"
            else:
                body = f"{rational_to_str(c)}*{v}"
        terms.append(body)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def format_field(v) -> str:
    """Human-readable deterministic rendering of a field value."""
    v = as_field(v)
    if isinstance(v, Fraction):
        return rational_to_str(v)
    return str(v)
