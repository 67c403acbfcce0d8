"""Exact-arithmetic engine for Bessel-series power coefficients.

Computes the polynomial family attached to powers of the normalized
Bessel series by several independent exact routes, together with
even-argument Bessel zeta values, Rayleigh polynomials, planar
random-walk moments and related integer sequences, and cross-verifies
every route against a truncated-series oracle.
"""

from .fields import (
    NU,
    ConsistencyError,
    DomainError,
    FieldTagError,
    NuPoly,
    RatFunc,
    Rational,
    field_from_json,
    field_to_json,
    format_field,
    rational_from_str,
    rational_to_str,
)
from .coefficients import (
    cholewinski_b2n,
    cholewinski_binom,
    factorial_ratio,
    generalized_binom,
    pochhammer,
)
from .rpoly import RPoly
from .series import (
    SYMBOLIC_R,
    TruncSeries,
    bessel_series,
    euler_pow,
    series_exp,
    series_log,
    series_mul,
)
from .zeta import ZetaTable, rayleigh_degree, rayleigh_phi, zeta_even, zeta_from_series
from .bell import bell_args_for_bessel, complete_bell
from .sequences import (
    SeqRecord,
    a_tilde,
    b_nu,
    b_tilde,
    bfile_lines,
    m_closed,
    m_recurrence,
    sequence_records,
)
from .bpoly import (
    EXACT_ROUTES,
    ROUTE_BELL,
    ROUTE_BENDER,
    ROUTE_MOMENT_SUM,
    ROUTE_SERIES,
    ROUTE_STEP_INTERP,
    ROUTE_ZETA_SUM,
    b_bender_as_printed,
    b_family,
    b_step,
    b_via_bell,
    b_via_moment_sum,
    b_via_series,
    b_via_step_interp,
    b_via_zeta_sum,
    binomial_type_check,
    cholewinski_convolution,
    generic_power_step,
    moment_of_sum,
    normalize_tilde,
    walk_moment,
)

__version__ = "0.1.0"
