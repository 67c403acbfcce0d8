"""Complete Bell polynomials and the argument builder for the Bessel family.

The Bell polynomials are evaluated (at field values or at polynomials in
the exponent variable r), never stored as multivariate symbolic objects:
the package only ever needs evaluations.
"""

from __future__ import annotations

from .coefficients import binomial, factorial
from .fields import DomainError, field_tag
from .rpoly import RPoly
from .zeta import ZetaTable

__all__ = ["complete_bell", "complete_bell_family", "bell_args_for_bessel"]


def complete_bell_family(a, n: int) -> list:
    """All complete Bell polynomial values B_0..B_n at the arguments ``a``.

    Uses the classical convolution recurrence
    B_m = sum_{k=0}^{m-1} C(m-1, k) a_{k+1} B_{m-1-k}, with B_0 = 1.
    ``a`` is 0-indexed storage for a_1..a_n and may hold any ring
    elements supporting + and *.
    """
    if n < 0:
        raise DomainError("Bell polynomial index must be >= 0")
    if len(a) < n:
        raise DomainError(f"need {n} arguments for the Bell value of index {n}")
    if n == 0:
        return [1]
    out = [a[0] * 0 + 1]
    for m in range(1, n + 1):
        acc = a[0] * 0
        for k in range(m):
            acc = acc + a[k] * binomial(m - 1, k) * out[m - 1 - k]
        out.append(acc)
    return out


def complete_bell(a, n: int):
    """The n-th complete Bell polynomial evaluated at a_1..a_n."""
    return complete_bell_family(a, n)[n]


def bell_args_for_bessel(nu, n: int, table: ZetaTable | None = None) -> list[RPoly]:
    """Arguments a_k = (-1)^(k-1) (k-1)! zeta_nu(2k) r, linear in symbolic r."""
    if n < 0:
        raise DomainError("argument count must be >= 0")
    if table is None:
        table = ZetaTable(nu)
    tag = field_tag(table.nu)
    args = []
    for k in range(1, n + 1):
        scale = factorial(k - 1) * (1 if k % 2 == 1 else -1)
        args.append(RPoly([0, table.value(k) * scale], tag))
    return args
