"""Shared combinatorial coefficients: Pochhammer ratios and modified binomials.

All factorial ratios in this package are rewritten as Pochhammer (rising
factorial) ratios before evaluation, so a symbolic order parameter never
requires evaluating the Gamma function: everything stays inside Q(nu).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .fields import DomainError, as_field

__all__ = [
    "factorial",
    "binomial",
    "pochhammer",
    "factorial_ratio",
    "cholewinski_b2n",
    "cholewinski_binom",
    "generalized_binom",
]


# Factorials and binomials of nonnegative integers appear in every inner
# loop; memoize them once per session.
@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise DomainError("factorial of a negative integer")
    return math.factorial(n)


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x, n: int):
    """Rising factorial x(x+1)...(x+n-1); the empty product for n = 0."""
    if n < 0:
        raise DomainError("pochhammer with negative length")
    x = as_field(x)
    result = x * 0 + 1
    for i in range(n):
        result = result * (x + i)
    return result


def factorial_ratio(n: int, j: int, nu):
    """The coefficient (nu+1)_n / ((nu+1)_j (nu+1)_{n-j}).

    Gamma-free form of the argument-shift weight; symmetric in j <-> n-j.
    """
    if not 0 <= j <= n:
        raise DomainError(f"factorial_ratio requires 0 <= j <= n, got j={j}, n={n}")
    nu = as_field(nu)
    shifted = nu + 1
    return pochhammer(shifted, n) / (pochhammer(shifted, j) * pochhammer(shifted, n - j))


def cholewinski_b2n(n: int, nu):
    """Normalizing coefficient 2^(2n) n! (nu+1)_n of the even series terms."""
    if n < 0:
        raise DomainError("cholewinski_b2n requires n >= 0")
    nu = as_field(nu)
    return pochhammer(nu + 1, n) * (4**n * factorial(n))


def cholewinski_binom(n: int, k: int, nu):
    """Modified binomial C(n,k) (nu+1)_n / ((nu+1)_k (nu+1)_{n-k})."""
    if not 0 <= k <= n:
        raise DomainError(f"cholewinski_binom requires 0 <= k <= n, got k={k}, n={n}")
    return factorial_ratio(n, k, nu) * binomial(n, k)


def generalized_binom(n: int, j: int, a):
    """Generalized binomial C(n,j) a_n / (a_j a_{n-j}) for a coefficient sequence."""
    if not 0 <= j <= n:
        raise DomainError(f"generalized_binom requires 0 <= j <= n, got j={j}, n={n}")
    seq = [as_field(v) for v in a]
    if len(seq) <= n:
        raise DomainError("coefficient sequence too short")
    for k in (n, j, n - j):
        if seq[k] == 0:
            raise DomainError(f"zero coefficient a_{k} in generalized binomial")
    return seq[n] / (seq[j] * seq[n - j]) * binomial(n, j)


def power_base_coeffs(nu, n_max: int) -> list:
    """The sequence a_k = 4^k (nu+1)_k normalizing the even Bessel series.

    These are the coefficients with the factorial split off (the series
    reads sum z^k / (a_k k!)), so the generalized binomial built on them
    coincides with the Cholewinski binomial.  Note b_{2k} = k! a_k.
    """
    nu = as_field(nu)
    out = [nu * 0 + 1]
    for k in range(1, n_max + 1):
        out.append(out[-1] * (nu + k) * 4)
    return out


def int_pochhammer(x: Fraction, n: int) -> Fraction:
    """Rising factorial of a concrete rational, kept for unit cross-checks."""
    result = Fraction(1)
    for i in range(n):
        result *= x + i
    return result
