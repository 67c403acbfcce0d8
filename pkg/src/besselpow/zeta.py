"""Even-argument Bessel zeta values and Rayleigh polynomials.

The values zeta_nu(2n) are defined here purely algebraically, by the
quadratic recurrence

    (nu + n) zeta_nu(2n) = sum_{r=1}^{n-1} zeta_nu(2r) zeta_nu(2n-2r)

with zeta_nu(2) = 1/(4(nu+1)); no Bessel-function zeros are ever
computed.  An independent series-log oracle extracts the same values
from the normalized Bessel series so the two routes can be compared
exactly.

For a symbolic (or integer-shifted symbolic) order parameter the table
is built over cleared denominators: with x_k = nu + c + k, the value
zeta(2n) equals q_n / (4^n prod_k x_k^floor(n/k)) where q_n satisfies
the gcd-free polynomial recurrence

    q_n = sum_{r=1}^{n-1} q_r q_{n-r} prod_k x_k^(floor(n/k) - floor(r/k) - floor((n-r)/k)).

This is the same quadratic recurrence with denominators multiplied out
(the floor exponents are nonnegative by superadditivity), and q_n is
exactly the Rayleigh numerator that rayleigh_phi returns.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import (
    TAG_RATIONAL,
    ConsistencyError,
    DomainError,
    NuPoly,
    RatFunc,
    as_field,
    field_tag,
)
from .series import bessel_series, series_log

__all__ = ["ZetaTable", "zeta_even", "zeta_from_series", "rayleigh_phi", "rayleigh_degree"]


def _linear_shift(nu) -> Fraction | None:
    """Return c when nu is the rational-function nu + c, else None."""
    if not isinstance(nu, RatFunc):
        return None
    if nu.den.degree != 0 or nu.num.degree != 1 or nu.num.coeffs[1] != 1:
        return None
    return nu.num.coeffs[0]


class ZetaTable:
    """Memo table of even zeta values at one fixed order parameter.

    Tables for distinct parameters are independent; one table fills
    sequentially in ascending n because the recurrence is ordered.
    ``sign`` exists solely so the verification harness can corrupt the
    recurrence on purpose and prove its own sensitivity.
    """

    def __init__(self, nu, sign: int = 1):
        self.nu = as_field(nu)
        self.sign = sign
        self._values: dict[int, object] = {}
        self._shift = _linear_shift(self.nu)
        self._numerators: dict[int, NuPoly] = {}

    def value(self, n: int):
        """zeta_nu(2n) as a field value; fills the table up to n."""
        if n < 1:
            raise DomainError("zeta table index must be >= 1")
        if n not in self._values:
            if self._shift is not None:
                self._fill_cleared(n)
            else:
                self._fill_generic(n)
        return self._values[n]

    def rayleigh_numerator(self, n: int) -> NuPoly:
        """The cleared-denominator numerator q_n (symbolic tables only)."""
        if self._shift is None:
            raise DomainError("Rayleigh numerators need a symbolic order parameter")
        self.value(n)
        return self._numerators[n]

    # -- generic field-arithmetic path --------------------------------------

    def _fill_generic(self, n_max: int) -> None:
        vals = self._values
        nu = self.nu
        if 1 not in vals:
            den = (nu + 1) * 4
            if den == 0:
                raise DomainError(f"zeta pole at nu = {nu}")
            vals[1] = (nu * 0 + 1) / den
        for n in range(2, n_max + 1):
            if n in vals:
                continue
            acc = nu * 0
            for r in range(1, n):
                acc = acc + vals[r] * vals[n - r]
            div = nu + n
            if div == 0:
                raise DomainError(f"zeta pole at nu = {nu} for index {n}")
            vals[n] = acc * self.sign / div

    # -- cleared-denominator path for nu + c -------------------------------

    def _factor(self, k: int) -> NuPoly:
        return NuPoly((self._shift + k, 1))

    def _denominator(self, n: int) -> NuPoly:
        den = NuPoly((1,))
        for k in range(1, n + 1):
            den = den * self._factor(k) ** (n // k)
        return den

    def _fill_cleared(self, n_max: int) -> None:
        qs = self._numerators
        if 1 not in qs:
            qs[1] = NuPoly((1,))
            self._materialize(1)
        top = max(qs)
        for n in range(top + 1, n_max + 1):
            acc = NuPoly(())
            for r in range(1, n):
                cof = NuPoly((1,))
                for k in range(1, n):
                    e = n // k - r // k - (n - r) // k
                    if e:
                        cof = cof * self._factor(k) ** e
                acc = acc + qs[r] * qs[n - r] * cof
            qs[n] = acc * self.sign
            self._materialize(n)

    def _materialize(self, n: int) -> None:
        num = self._numerators[n] * Fraction(1, 4**n)
        den = self._denominator(n)
        # the only factors den can share with num are the known linear ones
        for k in range(1, n + 1):
            root = -(self._shift + k)
            while den.degree > 0 and num.evaluate(root) == 0 and den.evaluate(root) == 0:
                lin = self._factor(k)
                num = num.exact_div(lin)
                den = den.exact_div(lin)
        self._values[n] = RatFunc._raw(num, den)


def zeta_even(nu, n: int, table: ZetaTable | None = None):
    """zeta_nu(2n) via the quadratic recurrence (memoized in ``table``)."""
    if table is None:
        table = ZetaTable(nu)
    elif table.nu != as_field(nu):
        raise DomainError("zeta table belongs to a different order parameter")
    return table.value(n)


def zeta_from_series(nu, n: int, order: int | None = None):
    """zeta_nu(2n) extracted from the series logarithm (the oracle route).

    The log of the normalized Bessel series has w^n coefficient
    (-1)^(n+1) 4^n zeta_nu(2n) / n, so the value is read off directly.
    """
    if n < 1:
        raise DomainError("zeta index must be >= 1")
    if order is None:
        order = n
    if order < n:
        raise DomainError("series order too small for requested zeta index")
    lg = series_log(bessel_series(nu, order))
    sign = 1 if (n + 1) % 2 == 0 else -1
    return lg.coeffs[n] * Fraction(sign * n, 4**n)


def rayleigh_degree(n: int) -> int:
    """Degree of the n-th Rayleigh polynomial: 1 - 2n + sum floor(n/k)."""
    return 1 - 2 * n + sum(n // k for k in range(1, n + 1))


def rayleigh_phi(n: int, table: ZetaTable | None = None) -> NuPoly:
    """Rayleigh polynomial: 4^n zeta_nu(2n) with its universal denominator cleared.

    Raises ConsistencyError if the product fails to clear the denominator
    exactly (which would falsify the underlying integrality theorem).
    """
    if n < 1:
        raise DomainError("Rayleigh polynomial index must be >= 1")
    if table is None:
        from .fields import NU

        table = ZetaTable(NU)
    if table._shift is None:
        raise DomainError("Rayleigh polynomials need a symbolic order parameter")
    value = table.value(n)
    den = table._denominator(n)
    cleared = value.num * 4**n * den
    quo, rem = cleared.divmod(value.den)
    if not rem.is_zero:
        raise ConsistencyError(
            f"denominator of zeta(2n) does not divide the universal product at n={n}"
        )
    return quo


def displayed_zeta_table() -> dict[int, RatFunc]:
    """As-printed closed forms for zeta_nu(4), zeta_nu(6), zeta_nu(8).

    These are the table values displayed alongside the recurrence in the
    source material.  They disagree with both the recurrence and the
    series oracle; the verification harness records that disagreement as
    an expected finding (id ZETA-TABLE-NOTE) rather than adopting them.
    """
    one = NuPoly((1,))
    nu1 = NuPoly((1, 1))
    return {
        2: RatFunc(one, nu1**3 * 16),
        3: RatFunc(one, nu1**4 * NuPoly((3, 2)) * 16),
        4: RatFunc(NuPoly((11, 10)), nu1**6 * NuPoly((6, 7, 2)) * 256),
    }
