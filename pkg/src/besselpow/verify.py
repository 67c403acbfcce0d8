"""Cross-verification harness with a deterministic machine-readable report.

Every invariant of the package is run here as a named check.  A check
ends in one of three states:

* ``pass``                  -- the invariant held exactly,
* ``fail``                  -- an unexpected mismatch (the report carries the
                               first counterexample as exact values),
* ``expected-discrepancy``  -- a *documented* disagreement between an
                               as-printed source formula and the exactly
                               verified routes; these are findings, not
                               failures, and each one cites a stable id.

The stable discrepancy ids are:

* ``ZETA-TABLE-NOTE``      -- as-printed closed forms for zeta(4), zeta(6),
                              zeta(8) disagree with the recurrence and the
                              series oracle (which agree with each other);
* ``BENDER-BDEF``          -- the as-printed recurrence for the polynomial
                              family produces a nonzero constant term from
                              index 2 on, while every exact route gives 0;
* ``MODSEQ1-PRODUCT``      -- the as-printed normalizing product for the
                              integer-valued sequence fails integrality (it
                              is 1/2 at n=3, order 0); the proof-level
                              Rayleigh reduction is used instead;
* ``TILDE-BINOMIAL-FORM``  -- the as-printed normalized addition identity
                              carries plain binomial coefficients and fails
                              from n=2 on; the even-binomial form produced
                              by the moment representation holds exactly.

Reports are deterministic for a fixed configuration: randomized checks
draw from a seeded generator and entries are sorted by check id and
parameters before serialization.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, replace
from fractions import Fraction

from . import __version__
from .bell import complete_bell_family
from .bpoly import (
    EXACT_ROUTES,
    ROUTE_SERIES,
    b_bender_as_printed,
    b_family,
    b_step,
    b_via_moment_sum_family,
    binomial_type_check,
    walk_moment,
)
from .coefficients import (
    cholewinski_b2n,
    cholewinski_binom,
    factorial,
    factorial_ratio,
    generalized_binom,
    pochhammer,
    power_base_coeffs,
)
from .fields import NU, ConsistencyError, NuPoly, RatFunc, format_field
from .sequences import a_tilde, b_nu, b_tilde, b_tilde_as_printed, m_closed, m_recurrence
from .series import TruncSeries, bessel_series, euler_pow, series_exp, series_log, series_mul
from .zeta import ZetaTable, displayed_zeta_table, rayleigh_degree, rayleigh_phi

__all__ = ["VerifyConfig", "CheckRun", "VerifyReport", "run_verify", "DISCREPANCY_IDS"]

DISCREPANCY_IDS = (
    "ZETA-TABLE-NOTE",
    "BENDER-BDEF",
    "MODSEQ1-PRODUCT",
    "TILDE-BINOMIAL-FORM",
)

PASS = "pass"
FAIL = "fail"
EXPECTED = "expected-discrepancy"


@dataclass(frozen=True)
class CheckRun:
    """One executed check cell."""

    check_id: str
    parameters: dict
    status: str
    detail: str
    discrepancy_id: str | None = None

    def sort_key(self):
        return (self.check_id, json.dumps(self.parameters, sort_keys=True))

    def to_json(self) -> dict:
        out = {
            "check_id": self.check_id,
            "parameters": self.parameters,
            "status": self.status,
            "detail": self.detail,
        }
        if self.discrepancy_id is not None:
            out["discrepancy_id"] = self.discrepancy_id
        return out


@dataclass(frozen=True)
class VerifyConfig:
    """Depths and knobs for one harness run; presets: quick() and full().

    ``mutate`` deliberately corrupts the even-zeta recurrence (sign flip)
    so the harness can demonstrate its own sensitivity.
    """

    seed: int = 0
    mutate: str = "none"  # "none" | "zeta-sign"
    samples: int = 12
    symbolic_route_n: int = 8
    concrete_route_n: int = 10
    concrete_nus: tuple[str, ...] = ("0", "1", "1/2", "5/3")
    zeta_n: int = 12
    rayleigh_n: int = 16
    seq_n: int = 20
    btilde_n: int = 10
    btilde_nu_max: int = 4
    binomial_n: int = 4
    series_order: int = 10
    reciprocal_n: int = 6

    @classmethod
    def quick(cls, **overrides) -> "VerifyConfig":
        return cls(**overrides)

    @classmethod
    def full(cls, **overrides) -> "VerifyConfig":
        base = dict(
            samples=25,
            symbolic_route_n=12,
            concrete_route_n=25,
            zeta_n=30,
            rayleigh_n=40,
            seq_n=60,
            btilde_n=30,
            btilde_nu_max=10,
            binomial_n=8,
            series_order=16,
            reciprocal_n=10,
        )
        base.update(overrides)
        return cls(**base)

    def capped(self, max_n: int) -> "VerifyConfig":
        """Cap every depth at ``max_n`` (CLI --max-n)."""
        return replace(
            self,
            symbolic_route_n=min(self.symbolic_route_n, max_n),
            concrete_route_n=min(self.concrete_route_n, max_n),
            zeta_n=max(1, min(self.zeta_n, max_n)),
            rayleigh_n=max(1, min(self.rayleigh_n, max_n)),
            seq_n=max(2, min(self.seq_n, max_n)),
            btilde_n=max(2, min(self.btilde_n, max_n)),
            binomial_n=max(1, min(self.binomial_n, max_n)),
            series_order=max(2, min(self.series_order, max_n)),
            reciprocal_n=max(1, min(self.reciprocal_n, max_n)),
        )


class VerifyReport:
    """Sorted check runs plus summary counts and a configuration echo."""

    def __init__(self, runs: list[CheckRun], config: VerifyConfig):
        self.runs = sorted(runs, key=CheckRun.sort_key)
        self.config = config

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, EXPECTED: 0}
        for run in self.runs:
            counts[run.status] += 1
        return {
            "pass": counts[PASS],
            "fail": counts[FAIL],
            "expected_discrepancy": counts[EXPECTED],
            "total": len(self.runs),
        }

    @property
    def failures(self) -> list[CheckRun]:
        return [r for r in self.runs if r.status == FAIL]

    def to_json_dict(self) -> dict:
        return {
            "artifact": {"name": "besselpow", "version": __version__},
            "config": asdict(self.config) | {"concrete_nus": list(self.config.concrete_nus)},
            "summary": self.summary,
            "runs": [r.to_json() for r in self.runs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


class _Ctx:
    """Shared lazily-built state for one harness run."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.sign = -1 if cfg.mutate == "zeta-sign" else 1
        self.rng = random.Random(cfg.seed)
        self._tables: dict = {}
        self._families: dict = {}

    def table(self, nu) -> ZetaTable:
        key = format_field(nu) if not isinstance(nu, str) else nu
        if key not in self._tables:
            value = NU if key == "nu" else nu
            self._tables[key] = ZetaTable(value, sign=self.sign)
        return self._tables[key]

    def sym_table(self) -> ZetaTable:
        if "nu" not in self._tables:
            self._tables["nu"] = ZetaTable(NU, sign=self.sign)
        return self._tables["nu"]

    def family(self, nu, route: str, n_max: int):
        key = (format_field(nu), route, n_max)
        if key not in self._families:
            table = self.table(nu)
            self._families[key] = b_family(nu, n_max, route, table)
        return self._families[key]

    # randomized scalars -----------------------------------------------------

    def rand_rational(self, lo: int = -9, hi: int = 9) -> Fraction:
        num = self.rng.randint(lo, hi)
        den = self.rng.randint(1, 9)
        return Fraction(num, den)

    def rand_nonzero_rational(self) -> Fraction:
        while True:
            q = self.rand_rational()
            if q != 0:
                return q

    def rand_nupoly(self, max_deg: int) -> NuPoly:
        deg = self.rng.randint(0, max_deg)
        return NuPoly([self.rand_rational() for _ in range(deg + 1)])

    def rand_ratfunc(self, max_deg: int = 2) -> RatFunc:
        num = self.rand_nupoly(max_deg)
        while True:
            den = self.rand_nupoly(max_deg)
            if not den.is_zero:
                return RatFunc(num, den)


def _result(check_id, params, ok, detail_fail, detail_pass="ok"):
    return CheckRun(check_id, params, PASS if ok else FAIL, detail_pass if ok else detail_fail)


# --------------------------------------------------------------------------
# exact-core checks
# --------------------------------------------------------------------------


def _check_field_axioms(ctx):
    runs = []
    for tag, draw in (
        ("rational", ctx.rand_rational),
        ("ratfunc", ctx.rand_ratfunc),
    ):
        ok, detail = True, "ok"
        for _ in range(ctx.cfg.samples):
            a, b, c = draw(), draw(), draw()
            if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
                ok, detail = False, f"associativity broke at a={a}, b={b}, c={c}"
                break
            if a * (b + c) != a * b + a * c:
                ok, detail = False, f"distributivity broke at a={a}, b={b}, c={c}"
                break
            if a != 0 and (a / a) != 1:
                ok, detail = False, f"multiplicative inverse broke at a={a}"
                break
        runs.append(
            CheckRun(
                "core/field-axioms",
                {"field": tag, "samples": ctx.cfg.samples},
                PASS if ok else FAIL,
                detail,
            )
        )
    return runs


def _check_ratfunc_canonical(ctx):
    ok, detail = True, "ok"
    for _ in range(ctx.cfg.samples):
        f = ctx.rand_ratfunc(3)
        g = ctx.rand_nupoly(2)
        if g.is_zero:
            g = NuPoly((1, 1))
        blown = RatFunc(f.num * g, f.den * g)
        if blown != f:
            ok, detail = False, f"reduction failed: ({f.num})*g/(({f.den})*g) != {f}"
            break
        again = RatFunc(f.num, f.den)
        if again.num != f.num or again.den != f.den:
            ok, detail = False, f"canonicalization not idempotent at {f}"
            break
        h = ctx.rand_ratfunc(3)
        syntactic = f == h
        cross = f.num * h.den == h.num * f.den
        if syntactic != cross:
            ok, detail = False, f"equality disagrees with cross-multiplication: {f} vs {h}"
            break
    return [CheckRun("core/ratfunc-canonical", {"samples": ctx.cfg.samples}, PASS if ok else FAIL, detail)]


def _check_factorial_ratio_symmetry(ctx):
    n_max = 12
    ok, detail = True, "ok"
    for n in range(n_max + 1):
        for j in range(n + 1):
            if factorial_ratio(n, j, NU) != factorial_ratio(n, n - j, NU):
                ok, detail = False, f"asymmetric at n={n}, j={j}"
                break
    return [CheckRun("core/factorial-ratio-symmetry", {"n_max": n_max}, PASS if ok else FAIL, detail)]


def _check_cholewinski_product(ctx):
    n_max = 20
    ok, detail = True, "ok"
    b2 = [cholewinski_b2n(k, NU) for k in range(n_max + 1)]
    for n in range(n_max + 1):
        for k in range(n + 1):
            if cholewinski_binom(n, k, NU) * b2[k] * b2[n - k] != b2[n]:
                ok, detail = False, f"product identity broke at n={n}, k={k}"
                break
    return [CheckRun("core/cholewinski-product", {"n_max": n_max}, PASS if ok else FAIL, detail)]


def _check_generalized_binom(ctx):
    # the power-base sequence carries no factorial (it sits with z^k/k!),
    # so the generalized binomial on it equals the Cholewinski binomial
    n_max = 12
    a = power_base_coeffs(NU, n_max)
    ok, detail = True, "ok"
    for n in range(n_max + 1):
        for j in range(n + 1):
            if generalized_binom(n, j, a) != cholewinski_binom(n, j, NU):
                ok, detail = False, f"notations disagree at n={n}, j={j}"
                break
        if not ok:
            break
    return [CheckRun("core/generalized-binom-cholewinski", {"n_max": n_max}, PASS if ok else FAIL, detail)]


# --------------------------------------------------------------------------
# power-series checks
# --------------------------------------------------------------------------


def _rand_unit_series(ctx, order: int) -> TruncSeries:
    return TruncSeries([Fraction(1)] + [ctx.rand_rational() for _ in range(order)])


def _check_euler_additivity(ctx):
    order = ctx.cfg.series_order
    ok, detail = True, "ok"
    for _ in range(ctx.cfg.samples):
        f = _rand_unit_series(ctx, order)
        r, s = ctx.rand_rational(-4, 4), ctx.rand_rational(-4, 4)
        lhs = series_mul(euler_pow(f, r), euler_pow(f, s))
        rhs = euler_pow(f, r + s)
        if lhs != rhs:
            ok, detail = False, f"exponent additivity broke at r={r}, s={s}"
            break
    return [
        CheckRun(
            "series/euler-additivity",
            {"order": order, "samples": ctx.cfg.samples},
            PASS if ok else FAIL,
            detail,
        )
    ]


def _check_euler_vs_mul(ctx):
    order = ctx.cfg.series_order
    ok, detail = True, "ok"
    for _ in range(max(3, ctx.cfg.samples // 3)):
        coeffs = [ctx.rand_nonzero_rational()] + [
            ctx.rand_rational() for _ in range(order)
        ]
        f = TruncSeries(coeffs)
        acc = TruncSeries([Fraction(1)] + [Fraction(0)] * order)
        for m in range(6):
            direct = euler_pow(f, Fraction(m))
            if direct != acc:
                ok, detail = False, f"power recurrence != repeated product at m={m}"
                break
            acc = series_mul(acc, f)
        if not ok:
            break
    return [
        CheckRun(
            "series/euler-vs-repeated-mul",
            {"order": order, "m_max": 5},
            PASS if ok else FAIL,
            detail,
        )
    ]


def _check_exp_log_roundtrip(ctx):
    count = max(10, ctx.cfg.samples * 2)
    order = min(12, ctx.cfg.series_order)
    ok, detail = True, "ok"
    for _ in range(count):
        f = _rand_unit_series(ctx, order)
        if series_exp(series_log(f)) != f:
            ok, detail = False, f"exp(log(f)) != f for coeffs {[str(c) for c in f.coeffs]}"
            break
    return [
        CheckRun(
            "series/exp-log-roundtrip",
            {"order": order, "samples": count},
            PASS if ok else FAIL,
            detail,
        )
    ]


def _check_log_bessel_zeta(ctx):
    runs = []
    for nu_s in ("0", "1", "1/2"):
        nu = Fraction(nu_s)
        k_max = min(10, ctx.cfg.zeta_n)
        table = ctx.table(nu)
        lg = series_log(bessel_series(nu, k_max))
        ok, detail = True, "ok"
        for k in range(1, k_max + 1):
            sign = 1 if (k + 1) % 2 == 0 else -1
            expected = table.value(k) * Fraction(sign * 4**k, k)
            if lg.coeffs[k] != expected:
                ok = False
                detail = (
                    f"log coefficient {k} is {lg.coeffs[k]}, zeta recurrence gives {expected}"
                )
                break
        runs.append(
            CheckRun(
                "series/log-bessel-matches-zeta",
                {"nu": nu_s, "k_max": k_max},
                PASS if ok else FAIL,
                detail,
            )
        )
    return runs


# --------------------------------------------------------------------------
# bessel-zeta checks
# --------------------------------------------------------------------------


def _check_zeta_recurrence_vs_oracle(ctx):
    n_max = ctx.cfg.zeta_n
    table = ctx.sym_table()
    lg = series_log(bessel_series(NU, n_max))
    ok, detail = True, "ok"
    for n in range(1, n_max + 1):
        sign = 1 if (n + 1) % 2 == 0 else -1
        oracle = lg.coeffs[n] * Fraction(sign * n, 4**n)
        if table.value(n) != oracle:
            ok = False
            detail = (
                f"first mismatch at n={n}: recurrence {table.value(n)} vs oracle {oracle}"
            )
            break
    return [CheckRun("zeta/recurrence-vs-series-oracle", {"n_max": n_max, "nu": "sym"}, PASS if ok else FAIL, detail)]


def _check_zeta_displayed_table(ctx):
    runs = []
    table = ctx.sym_table()
    displayed = displayed_zeta_table()
    for n, printed in sorted(displayed.items()):
        computed = table.value(n)
        oracle = None
        lg = series_log(bessel_series(NU, n))
        sign = 1 if (n + 1) % 2 == 0 else -1
        oracle = lg.coeffs[n] * Fraction(sign * n, 4**n)
        params = {"zeta_argument": 2 * n}
        if computed == oracle and printed != computed:
            runs.append(
                CheckRun(
                    "zeta/displayed-table-vs-routes",
                    params,
                    EXPECTED,
                    f"as-printed value {printed} differs from both routes, which agree on {computed}",
                    discrepancy_id="ZETA-TABLE-NOTE",
                )
            )
        elif computed != oracle:
            runs.append(
                CheckRun(
                    "zeta/displayed-table-vs-routes",
                    params,
                    FAIL,
                    f"recurrence {computed} and oracle {oracle} disagree",
                )
            )
        else:
            runs.append(
                CheckRun(
                    "zeta/displayed-table-vs-routes",
                    params,
                    FAIL,
                    "expected discrepancy absent: as-printed value matches the routes",
                )
            )
    return runs


def _check_zeta_evaluation_homomorphism(ctx):
    n_max = min(8, ctx.cfg.zeta_n)
    count = 20
    sym = ctx.sym_table()
    ok, detail = True, "ok"
    for _ in range(count):
        nu = Fraction(ctx.rng.randint(0, 40), ctx.rng.randint(7, 13))  # > -1, no poles
        conc = ZetaTable(nu, sign=ctx.sign)
        for n in range(1, n_max + 1):
            if sym.value(n).evaluate(nu) != conc.value(n):
                ok, detail = False, f"evaluation at nu={nu} diverges at n={n}"
                break
        if not ok:
            break
    return [
        CheckRun(
            "zeta/evaluation-homomorphism",
            {"n_max": n_max, "samples": count},
            PASS if ok else FAIL,
            detail,
        )
    ]


def _check_zeta_positivity(ctx):
    runs = []
    for nu_s in ("-1/2", "0", "1/2", "1", "5/3"):
        nu = Fraction(nu_s)
        table = ctx.table(nu)
        ok, detail = True, "ok"
        for n in range(1, ctx.cfg.zeta_n + 1):
            if not table.value(n) > 0:
                ok, detail = False, f"zeta({2*n}) = {table.value(n)} is not positive"
                break
        runs.append(
            CheckRun(
                "zeta/positivity",
                {"nu": nu_s, "n_max": ctx.cfg.zeta_n},
                PASS if ok else FAIL,
                detail,
            )
        )
    return runs


def _check_rayleigh_integrality(ctx):
    n_max = ctx.cfg.rayleigh_n
    table = ctx.sym_table()
    ok, detail = True, "ok"
    for n in range(1, n_max + 1):
        phi = rayleigh_phi(n, table)
        expected_deg = rayleigh_degree(n)
        if phi.degree != expected_deg:
            ok, detail = False, f"degree {phi.degree} != {expected_deg} at n={n}"
            break
        bad = [c for c in phi.coeffs if c.denominator != 1 or c <= 0]
        if bad:
            ok, detail = False, f"non positive-integer coefficient {bad[0]} at n={n}"
            break
    return [CheckRun("zeta/rayleigh-integrality", {"n_max": n_max}, PASS if ok else FAIL, detail)]


# --------------------------------------------------------------------------
# bell checks
# --------------------------------------------------------------------------


def _check_bell_vs_exp(ctx):
    n_max = 6
    ok, detail = True, "ok"
    for _ in range(ctx.cfg.samples):
        a = [ctx.rand_rational() for _ in range(n_max)]
        f = TruncSeries([Fraction(0)] + [a[p - 1] / factorial(p) for p in range(1, n_max + 1)])
        e = series_exp(f)
        bells = complete_bell_family(a, n_max)
        for n in range(n_max + 1):
            if e.coeffs[n] * factorial(n) != bells[n]:
                ok, detail = False, f"Bell value {n} disagrees with exp extraction for a={a}"
                break
        if not ok:
            break
    return [
        CheckRun(
            "bell/recurrence-vs-exp-extraction",
            {"n_max": n_max, "samples": ctx.cfg.samples},
            PASS if ok else FAIL,
            detail,
        )
    ]


def _check_bell_homogeneity(ctx):
    n_max = 8
    ok, detail = True, "ok"
    for _ in range(ctx.cfg.samples):
        a = [ctx.rand_rational() for _ in range(n_max)]
        t = ctx.rand_nonzero_rational()
        scaled = [a[k - 1] * t**k for k in range(1, n_max + 1)]
        plain = complete_bell_family(a, n_max)
        blown = complete_bell_family(scaled, n_max)
        for n in range(n_max + 1):
            if blown[n] != plain[n] * t**n:
                ok, detail = False, f"homogeneity broke at n={n}, t={t}"
                break
        if not ok:
            break
    return [
        CheckRun(
            "bell/homogeneity",
            {"n_max": n_max, "samples": ctx.cfg.samples},
            PASS if ok else FAIL,
            detail,
        )
    ]


# --------------------------------------------------------------------------
# polynomial-family checks
# --------------------------------------------------------------------------


def _route_rows(ctx, nu, nu_s: str, n_max: int):
    rows = []
    base = ctx.family(nu, ROUTE_SERIES, n_max)
    for route in EXACT_ROUTES:
        if route == ROUTE_SERIES:
            continue
        fam = ctx.family(nu, route, n_max)
        bad = next((n for n in range(n_max + 1) if fam[n] != base[n]), None)
        rows.append(
            _result(
                "bpoly/route-equivalence",
                {"nu": nu_s, "route": route, "n_max": n_max},
                bad is None,
                f"route {route} first differs from series route at n={bad}",
            )
        )
    return rows


def _check_route_equivalence_symbolic(ctx):
    return _route_rows(ctx, NU, "sym", ctx.cfg.symbolic_route_n)


def _check_route_equivalence_concrete(ctx):
    rows = []
    for nu_s in ctx.cfg.concrete_nus:
        rows.extend(_route_rows(ctx, Fraction(nu_s), nu_s, ctx.cfg.concrete_route_n))
    return rows


def _check_boundary_values(ctx):
    rows = []
    jobs = [("sym", NU, ctx.cfg.symbolic_route_n)] + [
        (nu_s, Fraction(nu_s), ctx.cfg.concrete_route_n) for nu_s in ctx.cfg.concrete_nus
    ]
    for nu_s, nu, n_max in jobs:
        for route in EXACT_ROUTES:
            fam = ctx.family(nu, route, n_max)
            ok, detail = True, "ok"
            for n, poly in enumerate(fam):
                if poly.degree != n:
                    ok, detail = False, f"degree {poly.degree} != {n} on route {route}"
                    break
                if n >= 1 and poly.evaluate(0) != 0:
                    ok, detail = False, f"value at 0 is {format_field(poly.evaluate(0))} at n={n}"
                    break
                if poly.evaluate(1) != 1:
                    ok, detail = False, f"value at 1 is {format_field(poly.evaluate(1))} at n={n}"
                    break
            rows.append(
                CheckRun(
                    "bpoly/boundary-values",
                    {"nu": nu_s, "route": route, "n_max": n_max},
                    PASS if ok else FAIL,
                    detail,
                )
            )
    return rows


def _check_step_consistency(ctx):
    n_max = min(8, ctx.cfg.symbolic_route_n)
    fam = b_via_moment_sum_family(NU, n_max)
    ok, detail = True, "ok"
    for r in range(5):
        values = [fam[n].evaluate(r) for n in range(n_max + 1)]
        for n in range(n_max + 1):
            stepped = b_step(NU, values, n)
            direct = fam[n].evaluate(r + 1)
            if stepped != direct:
                ok, detail = False, f"shift step at r={r}, n={n}: {stepped} vs {direct}"
                break
        if not ok:
            break
    return [CheckRun("bpoly/step-consistency", {"nu": "sym", "n_max": n_max, "r_max": 4}, PASS if ok else FAIL, detail)]


def _check_reciprocal(ctx):
    n_max = ctx.cfg.reciprocal_n
    f = bessel_series(NU, n_max)
    inv = euler_pow(f, Fraction(-1))
    prod = series_mul(f, inv)
    ok, detail = True, "ok"
    if any(prod.coeffs[k] != (1 if k == 0 else 0) for k in range(n_max + 1)):
        ok, detail = False, "series times its reciprocal is not 1"
    if ok:
        fam = ctx.family(NU, ROUTE_SERIES, n_max)
        for n in range(n_max + 1):
            expected = inv.coeffs[n] * (pochhammer(NU + 1, n) * factorial(n))
            if fam[n].evaluate(-1) != expected:
                ok, detail = False, f"value at r=-1 disagrees with reciprocal coefficients at n={n}"
                break
    return [CheckRun("bpoly/reciprocal-negative-exponent", {"nu": "sym", "n_max": n_max}, PASS if ok else FAIL, detail)]


def _check_binomial_type(ctx):
    rows = []
    for n in range(1, ctx.cfg.binomial_n + 1):
        fam = ctx.family(NU, ROUTE_SERIES, n)
        ok = binomial_type_check(NU, n, family=fam)
        rows.append(
            _result(
                "bpoly/binomial-type",
                {"nu": "sym", "n": n},
                ok,
                f"addition identity failed on the integer grid at n={n}",
            )
        )
    return rows


def _check_tilde_binomial_as_printed(ctx):
    fam = ctx.family(NU, ROUTE_SERIES, 2)
    printed_holds = binomial_type_check(NU, 2, family=fam, plain_binomial=True)
    true_holds = binomial_type_check(NU, 2, family=fam)
    if not printed_holds and true_holds:
        return [
            CheckRun(
                "bpoly/tilde-binomial-as-printed",
                {"nu": "sym", "n": 2},
                EXPECTED,
                "as-printed normalized identity with plain binomials fails at n=2; "
                "the even-binomial form from the moment representation holds",
                discrepancy_id="TILDE-BINOMIAL-FORM",
            )
        ]
    return [
        CheckRun(
            "bpoly/tilde-binomial-as-printed",
            {"nu": "sym", "n": 2},
            FAIL,
            "expected discrepancy absent or the corrected identity failed",
        )
    ]


def _check_bender_mismatch(ctx):
    rows = []
    for nu_s, expected_const in (("0", Fraction(1, 12)), ("1", Fraction(1, 16))):
        nu = Fraction(nu_s)
        table = ZetaTable(nu + 1, sign=ctx.sign)
        printed = b_bender_as_printed(nu, 2, Fraction(0), table)
        exact = ctx.family(nu, ROUTE_SERIES, 2)[2].evaluate(0)
        agree_low = b_bender_as_printed(nu, 1, Fraction(3), table) == ctx.family(
            nu, ROUTE_SERIES, 2
        )[1].evaluate(3)
        params = {"nu": nu_s, "n": 2, "r": "0"}
        if printed == expected_const and exact == 0 and printed != exact and agree_low:
            rows.append(
                CheckRun(
                    "bpoly/bender-as-printed",
                    params,
                    EXPECTED,
                    f"as-printed recurrence gives {printed} at r=0 where every exact route gives 0 "
                    "(first divergence at index 2; indices 0 and 1 agree)",
                    discrepancy_id="BENDER-BDEF",
                )
            )
        else:
            rows.append(
                CheckRun(
                    "bpoly/bender-as-printed",
                    params,
                    FAIL,
                    f"expected mismatch pattern absent: printed {printed}, exact {format_field(exact)}",
                )
            )
    return rows


def _check_walk_moments(ctx):
    ok, detail = True, "ok"
    for n in range(1, 11):
        if walk_moment(n, 2) != n:
            ok, detail = False, f"second moment of the {n}-step walk is not {n}"
            break
    if ok and (walk_moment(3, 4) != 15 or walk_moment(4, 4) != 28):
        ok, detail = False, "fourth moments W3(4), W4(4) are not 15, 28"
    if ok:
        # cross-check against the series oracle at order zero
        f = bessel_series(Fraction(0), 3)
        pw = euler_pow(f, Fraction(3))
        if pw.coeffs[2] * factorial(2) ** 2 != walk_moment(3, 4):
            ok, detail = False, "walk moment disagrees with the direct series power"
    return [CheckRun("bpoly/walk-moments", {"n_max": 10}, PASS if ok else FAIL, detail)]


# --------------------------------------------------------------------------
# sequence checks
# --------------------------------------------------------------------------


def _check_m_routes(ctx):
    k_max = ctx.cfg.seq_n
    table = ctx.table(Fraction(1))
    ok, detail = True, "ok"
    pins = {1: 1, 2: 1, 3: 3, 4: 16}
    for k in range(1, k_max + 1):
        closed = m_closed(k, table)
        rec = m_recurrence(k)
        if closed != rec:
            ok, detail = False, f"closed form {closed} != recurrence {rec} at k={k}"
            break
        if closed.denominator != 1 or closed <= 0:
            ok, detail = False, f"M_{k} = {closed} is not a positive integer"
            break
        if k in pins and closed != pins[k]:
            ok, detail = False, f"M_{k} = {closed}, pinned value is {pins[k]}"
            break
    return [CheckRun("seq/m-closed-vs-recurrence", {"k_max": k_max}, PASS if ok else FAIL, detail)]


def _check_m_atilde(ctx):
    n_max = ctx.cfg.seq_n
    table = ctx.table(Fraction(1))
    ok, detail = True, "ok"
    for n in range(1, n_max + 1):
        at = a_tilde(n, table)
        if at.denominator != 1 or at <= 0:
            ok, detail = False, f"a_tilde({n}) = {at} is not a positive integer"
            break
        if m_closed(n, table) != Fraction(n) * at / 2:
            ok, detail = False, f"halving identity broke at n={n}"
            break
    return [CheckRun("seq/m-atilde-relation", {"n_max": n_max}, PASS if ok else FAIL, detail)]


def _check_btilde_integrality(ctx):
    n_max = ctx.cfg.btilde_n
    nu_max = ctx.cfg.btilde_nu_max
    table = ctx.sym_table()
    ok, detail = True, "ok"
    for n in range(2, n_max + 1):
        for v in range(nu_max + 1):
            val = b_tilde(n, v, table)
            if val.denominator != 1 or val <= 0:
                ok, detail = False, f"b_tilde({n}, {v}) = {val} is not a positive integer"
                break
        if not ok:
            break
    return [
        CheckRun(
            "seq/b-tilde-integrality",
            {"n_max": n_max, "nu_max": nu_max},
            PASS if ok else FAIL,
            detail,
        )
    ]


def _check_bnu_reconstruction(ctx):
    n_max = 15
    table = ctx.table(NU + 1)
    ok, detail = True, "ok"
    for n in range(2, n_max + 1):
        sign = 1 if n % 2 == 0 else -1
        lhs = (
            b_nu(n, NU, table)
            * sign
            * (NU + 1)
            / (pochhammer(NU + 2, n - 1) * factorial(n - 1))
        )
        rhs = table.value(n - 1) * 4 ** (n - 1)
        if lhs != rhs:
            ok, detail = False, f"shifted-zeta reconstruction broke at n={n}"
            break
    return [CheckRun("seq/b-nu-reconstruction", {"n_max": n_max, "nu": "sym"}, PASS if ok else FAIL, detail)]


def _check_modseq1(ctx):
    printed = b_tilde_as_printed(3, 0)
    proof_based = b_tilde(3, 0, ctx.sym_table())
    params = {"n": 3, "nu": 0}
    if printed != proof_based and printed.denominator != 1:
        return [
            CheckRun(
                "seq/modseq1-as-printed",
                params,
                EXPECTED,
                f"as-printed normalizing product gives {printed} (not an integer); "
                f"the Rayleigh reduction gives {proof_based}",
                discrepancy_id="MODSEQ1-PRODUCT",
            )
        ]
    return [
        CheckRun(
            "seq/modseq1-as-printed",
            params,
            FAIL,
            f"expected discrepancy absent: printed {printed}, proof-based {proof_based}",
        )
    ]


_CHECKS = (
    _check_field_axioms,
    _check_ratfunc_canonical,
    _check_factorial_ratio_symmetry,
    _check_cholewinski_product,
    _check_generalized_binom,
    _check_euler_additivity,
    _check_euler_vs_mul,
    _check_exp_log_roundtrip,
    _check_log_bessel_zeta,
    _check_zeta_recurrence_vs_oracle,
    _check_zeta_displayed_table,
    _check_zeta_evaluation_homomorphism,
    _check_zeta_positivity,
    _check_rayleigh_integrality,
    _check_bell_vs_exp,
    _check_bell_homogeneity,
    _check_route_equivalence_symbolic,
    _check_route_equivalence_concrete,
    _check_boundary_values,
    _check_step_consistency,
    _check_reciprocal,
    _check_binomial_type,
    _check_tilde_binomial_as_printed,
    _check_bender_mismatch,
    _check_walk_moments,
    _check_m_routes,
    _check_m_atilde,
    _check_btilde_integrality,
    _check_bnu_reconstruction,
    _check_modseq1,
)


def run_verify(config: VerifyConfig | None = None) -> VerifyReport:
    """Run every check at the configured depth and assemble the report."""
    cfg = config or VerifyConfig.quick()
    ctx = _Ctx(cfg)
    runs: list[CheckRun] = []
    for check in _CHECKS:
        try:
            runs.extend(check(ctx))
        except (ConsistencyError, ValueError, ZeroDivisionError, OverflowError) as exc:
            check_id = check.__name__.removeprefix("_check_").replace("_", "-")
            runs.append(
                CheckRun(
                    check_id=f"harness/{check_id}",
                    parameters={},
                    status=FAIL,
                    detail=f"check raised {type(exc).__name__}: {exc}",
                )
            )
    return VerifyReport(runs, cfg)
