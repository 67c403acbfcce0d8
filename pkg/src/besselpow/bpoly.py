"""The central engine: the coefficient polynomials of Bessel-series powers.

For each n, the degree-n polynomial computed here gives, as a function of
the exponent r, the n-th series coefficient of the r-th power of the
normalized Bessel series (scaled by the series' own normalizers).  The
same family is computed by five independent exact routes:

* ``series``      -- the arbitrary-exponent series recurrence (the oracle),
* ``bell``        -- complete Bell polynomials over even zeta values,
* ``zeta-sum``    -- a direct recurrence weighted by even zeta values,
* ``moment-sum``  -- the vanishing-odd-moment recurrence, symbolic in r,
* ``step-interp`` -- argument-shift stepping plus exact interpolation,

plus a sixth, ``bender``, which reproduces an as-printed source recurrence
verbatim for discrepancy reporting: it is retained unrepaired, and its
documented disagreement with the other routes carries the stable id
BENDER-BDEF in verification reports.

Routes for distinct (nu, n) are pure and independently schedulable.
"""

from __future__ import annotations

from fractions import Fraction

from .coefficients import (
    binomial,
    cholewinski_binom,
    factorial,
    pochhammer,
)
from .fields import (
    DomainError,
    as_field,
    coerce_field,
    field_one,
    field_tag,
    field_zero,
    is_integer_value,
)
from .rpoly import RPoly, lagrange_interpolate
from .sequences import b_nu
from .series import SYMBOLIC_R, bessel_series, euler_pow
from .zeta import ZetaTable

__all__ = [
    "ROUTE_SERIES",
    "ROUTE_BELL",
    "ROUTE_ZETA_SUM",
    "ROUTE_MOMENT_SUM",
    "ROUTE_STEP_INTERP",
    "ROUTE_BENDER",
    "EXACT_ROUTES",
    "b_family",
    "b_via_series",
    "b_via_bell",
    "b_via_zeta_sum",
    "b_via_moment_sum",
    "b_step",
    "b_via_step_interp",
    "b_bender_as_printed",
    "generic_power_step",
    "normalize_tilde",
    "tilde_scale",
    "binomial_type_check",
    "cholewinski_convolution",
    "walk_moment",
    "moment_of_sum",
]

ROUTE_SERIES = "series"
ROUTE_BELL = "bell"
ROUTE_ZETA_SUM = "zeta-sum"
ROUTE_MOMENT_SUM = "moment-sum"
ROUTE_STEP_INTERP = "step-interp"
ROUTE_BENDER = "bender"

#: The cross-verifying routes; ``bender`` is excluded because it is kept
#: as a reproduction artifact with a documented mismatch.
EXACT_ROUTES = (
    ROUTE_SERIES,
    ROUTE_BELL,
    ROUTE_ZETA_SUM,
    ROUTE_MOMENT_SUM,
    ROUTE_STEP_INTERP,
)


def generic_power_step(a, a_r: list, n: int):
    """One argument-shift step of the generic power-coefficient recurrence.

    Given the coefficient sequence ``a`` of the base series and the values
    A_0(r)..A_n(r) in ``a_r``, returns A_n(r+1) = sum_j C(n,j) a_n/(a_j a_{n-j}) A_j(r).
    """
    from .coefficients import generalized_binom

    if len(a_r) <= n:
        raise DomainError("need A_0(r)..A_n(r) to step index n")
    acc = None
    for j in range(n + 1):
        term = generalized_binom(n, j, a) * a_r[j]
        acc = term if acc is None else acc + term
    return acc


# --------------------------------------------------------------------------
# the five exact routes
# --------------------------------------------------------------------------


def b_via_series(nu, n_max: int) -> list[RPoly]:
    """Oracle route: scale the symbolic-exponent power-series coefficients.

    The n-th output is n! (nu+1)_n times the w^n coefficient of the
    symbolic power of the normalized Bessel series.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    nu = as_field(nu)
    powers = euler_pow(bessel_series(nu, n_max), SYMBOLIC_R)
    out = []
    for n, d in enumerate(powers.coeffs):
        out.append(d * (pochhammer(nu + 1, n) * factorial(n)))
    return out


def b_via_bell_family(nu, n_max: int, table: ZetaTable | None = None) -> list[RPoly]:
    """Bell route: 4^n (nu+1)_n times the Bell value at the zeta arguments."""
    from .bell import bell_args_for_bessel, complete_bell_family

    nu = as_field(nu)
    if table is None:
        table = ZetaTable(nu)
    tag = field_tag(nu)
    args = bell_args_for_bessel(nu, n_max, table)
    bells = complete_bell_family(args, n_max) if n_max > 0 else [RPoly.one(tag)]
    out = []
    for n in range(n_max + 1):
        bell_n = bells[n] if isinstance(bells[n], RPoly) else RPoly.one(tag)
        out.append(bell_n * (pochhammer(nu + 1, n) * 4**n))
    return out


def b_via_bell(nu, n: int, table: ZetaTable | None = None) -> RPoly:
    return b_via_bell_family(nu, n, table)[n]


def b_via_zeta_sum_family(nu, n_max: int, table: ZetaTable | None = None) -> list[RPoly]:
    """Zeta-weighted recurrence route.

    B_n = r * sum_{k=0}^{n-1} C(n-1,k) (-1)^k k! (nu+n-k)_{k+1} 4^(k+1)
              zeta_nu(2k+2) B_{n-1-k}
    with the rising factorial standing in for the usual factorial ratio.
    """
    nu = as_field(nu)
    if table is None:
        table = ZetaTable(nu)
    tag = field_tag(nu)
    r_var = RPoly.var(tag)
    out = [RPoly.one(tag)]
    for n in range(1, n_max + 1):
        acc = RPoly.zero(tag)
        for k in range(n):
            scale = (
                table.value(k + 1)
                * pochhammer(nu + (n - k), k + 1)
                * (binomial(n - 1, k) * factorial(k) * (-1) ** k * 4 ** (k + 1))
            )
            acc = acc + out[n - 1 - k] * scale
        out.append(acc * r_var)
    return out


def b_via_zeta_sum(nu, n: int, table: ZetaTable | None = None) -> RPoly:
    return b_via_zeta_sum_family(nu, n, table)[n]


def b_via_moment_sum_family(nu, n_max: int) -> list[RPoly]:
    """Vanishing-odd-moment recurrence route, symbolic r carried through.

    B_n(r) = sum_{k=1}^{n} [k(r+1)/n - 1] C(n,k)
             (nu+1)_n / ((nu+1)_k (nu+1)_{n-k}) B_{n-k}(r).
    """
    nu = as_field(nu)
    tag = field_tag(nu)
    out = [RPoly.one(tag)]
    for n in range(1, n_max + 1):
        acc = RPoly.zero(tag)
        for k in range(1, n + 1):
            weight = RPoly([Fraction(k - n, n), Fraction(k, n)], tag)
            acc = acc + weight * out[n - k] * cholewinski_binom(n, k, nu)
        out.append(acc)
    return out


def b_via_moment_sum(nu, n: int) -> RPoly:
    return b_via_moment_sum_family(nu, n)[n]


def b_step(nu, b_at_r: list, n: int):
    """Value B_n(r+1) from the values B_0(r)..B_n(r) by the shift identity."""
    if len(b_at_r) <= n:
        raise DomainError("need B_0(r)..B_n(r) to step index n")
    nu = as_field(nu)
    acc = None
    for j in range(n + 1):
        term = cholewinski_binom(n, j, nu) * b_at_r[j]
        acc = term if acc is None else acc + term
    return acc


def b_via_step_interp_family(nu, n_max: int) -> list[RPoly]:
    """Stepping route: values on the integer grid, then exact interpolation.

    Starting from the value vectors at r = 0 (1, 0, 0, ...) the shift
    identity is iterated; the degree-n polynomial is then pinned by its
    n+1 values at r = 0..n.
    """
    nu = as_field(nu)
    tag = field_tag(nu)
    one = field_one(tag)
    zero = field_zero(tag)
    grid = [[one] + [zero] * n_max]  # values at r = 0
    for _ in range(n_max):
        prev = grid[-1]
        grid.append([b_step(nu, prev, n) for n in range(n_max + 1)])
    out = []
    for n in range(n_max + 1):
        nodes = list(range(n + 1))
        values = [grid[r][n] for r in nodes]
        out.append(lagrange_interpolate(nodes, values, tag))
    return out


def b_via_step_interp(nu, n: int) -> RPoly:
    return b_via_step_interp_family(nu, n)[n]


def b_family(nu, n_max: int, route: str, table: ZetaTable | None = None) -> list[RPoly]:
    """The whole family B_0..B_n_max on one named exact route.

    ``table`` is forwarded to the zeta-consuming routes so a shared (or
    deliberately corrupted) table can be used.
    """
    if route == ROUTE_SERIES:
        return b_via_series(nu, n_max)
    if route == ROUTE_BELL:
        return b_via_bell_family(nu, n_max, table)
    if route == ROUTE_ZETA_SUM:
        return b_via_zeta_sum_family(nu, n_max, table)
    if route == ROUTE_MOMENT_SUM:
        return b_via_moment_sum_family(nu, n_max)
    if route == ROUTE_STEP_INTERP:
        return b_via_step_interp_family(nu, n_max)
    raise DomainError(f"unknown exact route {route!r}")


# --------------------------------------------------------------------------
# the as-printed reproduction route
# --------------------------------------------------------------------------


def b_bender_as_printed(nu, n: int, r, table: ZetaTable | None = None):
    """Evaluate the as-printed source recurrence, without repair.

    B_k = r (nu+k)/(nu+1) B_{k-1}
          + sum_{j=2}^{k} (b_j(nu)/k) (1/(nu+2)_j) C(nu+k, j) B_{k-j}

    with C(nu+k, j) = (nu+k-j+1)_j / j! and b_j the signed sequence tied
    to shifted zeta values.  The value is returned as computed; it is
    known to disagree with the exact routes from k = 2 on (for example a
    nonzero constant term at r = 0), and that mismatch is reported, not
    fixed.
    """
    if n < 0:
        raise DomainError("index must be >= 0")
    nu = as_field(nu)
    r = as_field(r)
    one = field_one(field_tag(nu))
    if table is None:
        table = ZetaTable(nu + 1)
    values = [one]
    for k in range(1, n + 1):
        lead = r * values[k - 1] * ((nu + k) / (nu + 1))
        acc = lead
        for j in range(2, k + 1):
            coeff = (
                b_nu(j, nu, table)
                * Fraction(1, k)
                / pochhammer(nu + 2, j)
                * pochhammer(nu + k - j + 1, j)
                * Fraction(1, factorial(j))
            )
            acc = acc + values[k - j] * coeff
        values.append(acc)
    return values[n]


# --------------------------------------------------------------------------
# normalization, identities, moments
# --------------------------------------------------------------------------


def tilde_scale(nu, n: int):
    """Scale factor (2n)! / (n! 4^n (nu+1)_n) between B_n and its normalization."""
    nu = as_field(nu)
    return (
        field_one(field_tag(nu))
        * Fraction(factorial(2 * n), factorial(n) * 4**n)
        / pochhammer(nu + 1, n)
    )


def normalize_tilde(b: RPoly, nu, n: int) -> RPoly:
    """The moment-normalized polynomial: tilde_scale(nu, n) times B_n."""
    return b * tilde_scale(nu, n)


def binomial_type_check(
    nu, n: int, family: list[RPoly] | None = None, plain_binomial: bool = False
) -> bool:
    """Exact check of the two addition identities at index n.

    The unnormalized identity carries the modified binomial coefficients;
    the normalized identity carries the even binomial coefficients
    C(2n, 2k), which is what the moment representation produces once the
    odd moments drop out.  Passing ``plain_binomial=True`` instead checks
    the as-printed normalized display with C(n, k), which fails from
    n = 2 on and is reported by the verification harness under the id
    TILDE-BINOMIAL-FORM rather than adopted.

    Both sides are polynomials of degree at most n in each of the two
    shifted arguments, so agreement on the integer grid {0..n}^2 proves
    the identities; nothing is sampled.
    """
    nu = as_field(nu)
    if family is None:
        family = b_via_series(nu, n)
    tildes = [normalize_tilde(family[k], nu, k) for k in range(n + 1)]
    cho = [cholewinski_binom(n, k, nu) for k in range(n + 1)]
    weights = [
        binomial(n, k) if plain_binomial else binomial(2 * n, 2 * k)
        for k in range(n + 1)
    ]
    for r in range(n + 1):
        for s in range(n + 1):
            target_t = tildes[n].evaluate(r + s)
            target_b = family[n].evaluate(r + s)
            acc_t = target_t * 0
            acc_b = acc_t
            for k in range(n + 1):
                acc_t = acc_t + tildes[k].evaluate(r) * tildes[n - k].evaluate(s) * weights[k]
                acc_b = acc_b + family[k].evaluate(r) * family[n - k].evaluate(s) * cho[k]
            if acc_t != target_t or acc_b != target_b:
                return False
    return True


def cholewinski_convolution(x, y, n: int, nu):
    """Finite even-exponent convolution sum_{k} C~(n,k) x^(2k) y^(2n-2k)."""
    if n < 0:
        raise DomainError("convolution order must be >= 0")
    x = as_field(x)
    y = as_field(y)
    acc = None
    for k in range(n + 1):
        term = cholewinski_binom(n, k, nu) * x ** (2 * k) * y ** (2 * (n - k))
        acc = term if acc is None else acc + term
    return acc


def walk_moment(n: int, s: int) -> Fraction:
    """Even moment of the distance after n unit steps of a planar walk.

    The 2*sigma-th moment equals the order-zero family polynomial of
    index sigma evaluated at r = n; odd moments are out of scope.
    """
    if n < 1:
        raise DomainError("walk length must be >= 1")
    if s < 0 or s % 2 != 0:
        raise DomainError("only even moments are supported")
    sigma = s // 2
    family = b_via_series(Fraction(0), sigma)
    return family[sigma].evaluate(Fraction(n))


def moment_of_sum(nu, r: int, n: int):
    """2n-th moment of a sum of r independent symmetric beta-type variables.

    Equals the normalized polynomial evaluated at r; at r = 1 this is the
    closed form (2n)! / (n! 4^n (nu+1)_n) exactly.
    """
    if not isinstance(r, int) or r < 1:
        raise DomainError("the number of summands must be a positive integer")
    nu = as_field(nu)
    family = b_via_series(nu, n)
    return normalize_tilde(family[n], nu, n).evaluate(r)
