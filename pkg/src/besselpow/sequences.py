"""Integer sequences tied to shifted even zeta values.

Two independent routes for the M sequence, the halved companion
sequence, the signed rational sequence b_n at general order, and its
integer-valued normalization via Rayleigh polynomials.  Integrality is
asserted computationally; the one as-printed normalizing product that
fails integrality is kept for discrepancy reporting (id MODSEQ1-PRODUCT)
rather than silently replaced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import binomial, factorial, pochhammer
from .fields import (
    ConsistencyError,
    DomainError,
    as_field,
    field_to_json,
    is_integer_value,
)
from .zeta import ZetaTable, rayleigh_phi

__all__ = [
    "SeqRecord",
    "SEQUENCE_NAMES",
    "m_closed",
    "m_recurrence",
    "a_tilde",
    "b_nu",
    "b_tilde",
    "b_tilde_as_printed",
    "sequence_records",
    "bfile_lines",
]

SEQUENCE_NAMES = ("M", "a_tilde", "b_nu", "b_tilde")


@dataclass(frozen=True)
class SeqRecord:
    """One sequence entry: name, index, exact value, integrality flag."""

    name: str
    index: int
    value: object
    integral: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "index": self.index,
            "value": field_to_json(self.value),
            "integral": self.integral,
        }


def _zeta1_table(table: ZetaTable | None) -> ZetaTable:
    if table is None:
        return ZetaTable(Fraction(1))
    if table.nu != Fraction(1):
        raise DomainError("this sequence needs the zeta table at order 1")
    return table


def m_closed(k: int, table: ZetaTable | None = None) -> Fraction:
    """M_k = k! (k+1)! 4^k zeta_1(2k); raises if the value is not an integer."""
    if k < 1:
        raise DomainError("sequence index must be >= 1")
    table = _zeta1_table(table)
    value = table.value(k) * factorial(k) * factorial(k + 1) * 4**k
    if value.denominator != 1:
        raise ConsistencyError(f"M_{k} failed integrality: {value}")
    return value


def m_recurrence(k: int) -> Fraction:
    """M by its quadratic self-recurrence with M_1 = M_2 = 1."""
    if k < 1:
        raise DomainError("sequence index must be >= 1")
    vals = [Fraction(1), Fraction(1)]  # M_1, M_2
    for n in range(3, k + 1):
        acc = Fraction(0)
        for r in range(1, n):
            acc += Fraction(binomial(n, r) ** 2, (r + 1) * (n - r + 1)) * vals[r - 1] * vals[n - r - 1]
        vals.append(acc)
    return vals[k - 1]


def a_tilde(n: int, table: ZetaTable | None = None) -> Fraction:
    """Companion sequence 2^(2n+1) (n+1)! (n-1)! zeta_1(2n); integer-valued."""
    if n < 1:
        raise DomainError("sequence index must be >= 1")
    table = _zeta1_table(table)
    value = table.value(n) * (2 ** (2 * n + 1) * factorial(n + 1) * factorial(n - 1))
    if value.denominator != 1:
        raise ConsistencyError(f"a_tilde_{n} failed integrality: {value}")
    return value


def b_nu(n: int, nu, table: ZetaTable | None = None):
    """Signed rational sequence at general order.

    b_n = (nu+2)_{n-1} (n-1)! (-1)^n 4^(n-1) zeta_{nu+1}(2n-2) / (nu+1),
    the Gamma-free form of the closed expression; defined for n >= 2.
    ``table`` must be the zeta table at the shifted order nu+1.
    """
    if n < 2:
        raise DomainError("b_nu is defined for n >= 2")
    nu = as_field(nu)
    if table is None:
        table = ZetaTable(nu + 1)
    elif table.nu != nu + 1:
        raise DomainError("b_nu needs the zeta table at the shifted order nu+1")
    sign = 1 if n % 2 == 0 else -1
    return (
        table.value(n - 1)
        * pochhammer(nu + 2, n - 1)
        * (factorial(n - 1) * sign * 4 ** (n - 1))
        / (nu + 1)
    )


def b_tilde(n: int, nu: int, table: ZetaTable | None = None) -> Fraction:
    """Integer-valued normalization: the Rayleigh polynomial at order nu+1.

    Follows the proof-level reduction to phi_{2n-2}(nu+1); the as-printed
    normalizing product differs and is kept separately in
    :func:`b_tilde_as_printed` for discrepancy reporting.
    """
    if n < 2:
        raise DomainError("b_tilde is defined for n >= 2")
    if not isinstance(nu, int) or nu < 0:
        raise DomainError("b_tilde is defined for integer order nu >= 0")
    phi = rayleigh_phi(n - 1, table)
    value = phi.evaluate(Fraction(nu + 1))
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"b_tilde({n}, {nu}) failed integrality: {value}")
    return value


def b_tilde_as_printed(n: int, nu: int):
    """The as-printed normalizing product, kept for discrepancy reporting.

    (-1)^n b_n(nu) (nu+1)! (nu+1) / ((nu+n)! (n-1)!) *
    prod_{k=1}^{n} (k+nu)^floor(n/k)

    which simplifies to 4^(n-1) zeta_{nu+1}(2n-2) prod_{k=1}^n (k+nu)^floor(n/k).
    Already at n = 3, nu = 0 this is 1/2, not an integer; the
    verification harness records the divergence from :func:`b_tilde`
    under the id MODSEQ1-PRODUCT.
    """
    if n < 2:
        raise DomainError("defined for n >= 2")
    if not isinstance(nu, int) or nu < 0:
        raise DomainError("defined for integer order nu >= 0")
    nu_f = Fraction(nu)
    table = ZetaTable(nu_f + 1)
    sign = 1 if n % 2 == 0 else -1
    value = (
        b_nu(n, nu_f, table)
        * sign
        * factorial(nu + 1)
        * (nu + 1)
        / factorial(nu + n)
        / factorial(n - 1)
    )
    prod = Fraction(1)
    for k in range(1, n + 1):
        prod *= Fraction(k + nu) ** (n // k)
    return value * prod


def sequence_records(
    name: str,
    max_index: int,
    nu=None,
    table: ZetaTable | None = None,
) -> list[SeqRecord]:
    """Rows of one named sequence up to ``max_index``, ready to render."""
    if name not in SEQUENCE_NAMES:
        raise DomainError(f"unknown sequence {name!r}; expected one of {SEQUENCE_NAMES}")
    records = []
    if name == "M":
        table = _zeta1_table(table)
        for k in range(1, max_index + 1):
            v = m_closed(k, table)
            records.append(SeqRecord(name, k, v, v.denominator == 1))
    elif name == "a_tilde":
        table = _zeta1_table(table)
        for k in range(1, max_index + 1):
            v = a_tilde(k, table)
            records.append(SeqRecord(name, k, v, v.denominator == 1))
    elif name == "b_nu":
        target = as_field(nu) if nu is not None else None
        if target is None:
            from .fields import NU

            target = NU
        shared = ZetaTable(target + 1)
        for k in range(2, max_index + 1):
            v = b_nu(k, target, shared)
            records.append(SeqRecord(name, k, v, is_integer_value(v)))
    else:  # b_tilde
        order = 0 if nu is None else nu
        if isinstance(order, Fraction):
            if order.denominator != 1:
                raise DomainError("b_tilde needs an integer order nu >= 0")
            order = int(order)
        shared = ZetaTable(_symbolic_nu())
        for k in range(2, max_index + 1):
            v = b_tilde(k, order, shared)
            records.append(SeqRecord(name, k, v, v.denominator == 1))
    return records


def _symbolic_nu():
    from .fields import NU

    return NU


def bfile_lines(records: list[SeqRecord]) -> str:
    """OEIS-style rows: "index value", one per line, ASCII, no header."""
    lines = []
    for rec in records:
        if not rec.integral:
            raise DomainError(
                f"b-file export needs integer values; {rec.name}({rec.index}) is not"
            )
        value = rec.value
        if isinstance(value, Fraction):
            rendered = str(value.numerator)
        else:
            rendered = str(int(value.as_rational()))
        lines.append(f"{rec.index} {rendered}")
    return "\n".join(lines) + ("\n" if lines else "")
