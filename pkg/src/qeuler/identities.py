"""Machine-checkable catalog of the library's identities.

Each TheoremId names one exact equality between two independently built ring
elements; verify() evaluates both sides at a parameter point and reports
pass/fail (or "rejected" when the point violates the identity's side
conditions, which are part of the claims).  run_grid() enumerates every
theorem over a parameter grid, deterministically, and aggregates a summary.

The checkers support five documented single-token mutations of their
right-hand-side builders (MUTANTS below).  Running with a mutation active
must produce failures on the default grid; that guards the suite against
vacuous checkers that compare a value against itself.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass

from .cyclotomic import CycloRF
from .padic import PadicConfig, fermionic_integral_truncated, specialize
from .qpoly import RatFuncQ
from .qspecial import (
    EulerCache,
    EulerParams,
    MomentPoly,
    bernstein,
    bernstein_moment_poly,
    q_number,
    q_number_inv_arg,
    q_pow,
)

THEOREM_IDS = (
    "T1_CLOSED_EQ_EXPANSION",
    "T2_REFLECTION",
    "T3_RECURRENCE",
    "T4_SHIFT2",
    "T5_REFLECT_INTEGRAL",
    "C6_INTEGRAL",
    "EQ12_SYMMETRY",
    "T7_BERNSTEIN_INTEGRAL",
    "T8_PRODUCT2",
    "C9_MOMENT_FORM",
    "T10_PRODUCT_S",
    "C11_MOMENT_FORM_S",
    "LEMMA_COMPLEMENT",
)

# Single-token right-hand-side mutations, used to prove the checkers can fail.
MUTANTS = {
    "c6-exponent": "C6_INTEGRAL right side uses q^h instead of q^(h+1)",
    "t2-sign": "T2_REFLECTION right side flips the parity sign (-1)^n",
    "t4-offset": "T4_SHIFT2 tail term uses q^(2h+1) zeta^2 instead of q^(2h) zeta^2",
    "t7-parity": "T7_BERNSTEIN_INTEGRAL right side uses (-1)^l instead of (-1)^(k+l)",
    "t8-twist": "T8_PRODUCT2 right side multiplies by zeta^2 instead of zeta",
}

C9_NOTE = (
    "checked with the twisted values on the left side (matching the moment "
    "expansion it is derived from); the untwisted reading is covered by the "
    "level m = 0 grid points"
)


@dataclass
class GridSpec:
    """Parameter grid; enumeration respects every theorem's side conditions."""

    primes: tuple[int, ...] = (3, 5)
    levels: tuple[int, ...] = (0, 1)
    weights: tuple[int, ...] = (-2, -1, 0, 1, 2, 3)
    n_max: int = 8
    x_range: tuple[int, ...] = (-3, -2, -1, 0, 1, 2, 3, 4)
    s_values: tuple[int, ...] = (2, 3)
    ni_max: int = 4
    theorems: tuple[str, ...] = THEOREM_IDS

    def __post_init__(self):
        unknown = set(self.theorems) - set(THEOREM_IDS)
        if unknown:
            raise ValueError(f"unknown theorem ids: {sorted(unknown)}")

    def param_triples(self):
        for p in self.primes:
            for m in self.levels:
                for h in self.weights:
                    yield EulerParams(p, m, h)


def default_grid() -> GridSpec:
    return GridSpec()


@dataclass
class IdentityReport:
    theorem: str
    point: dict
    status: str  # "passed", "failed", or "rejected"
    lhs: str | None = None
    rhs: str | None = None
    elapsed: float = 0.0
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "passed"

    def to_dict(self) -> dict:
        point = {
            k: (list(v) if isinstance(v, tuple) else v) for k, v in self.point.items()
        }
        out = {
            "theorem": self.theorem,
            "point": point,
            "status": self.status,
            "passed": self.passed,
            "elapsed": self.elapsed,
        }
        if self.lhs is not None:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        if self.note is not None:
            out["note"] = self.note
        return out


class Rejected(Exception):
    """A point violates the identity's side conditions."""


class Workspace:
    """Shared per-parameter caches so repeated verification stays warm."""

    def __init__(self):
        self._caches: dict[EulerParams, EulerCache] = {}

    def cache(self, params: EulerParams) -> EulerCache:
        got = self._caches.get(params)
        if got is None:
            got = EulerCache(params)
            self._caches[params] = got
        return got


def _params_of(point: dict) -> EulerParams:
    return EulerParams(point["p"], point["m"], point["h"])


def _rhs_tail(cache: EulerCache) -> CycloRF:
    """The k = 0 right-hand-side constant, the q-analogue of 2."""
    return cache.constant(RatFuncQ([1, 1]))


# --- checkers ------------------------------------------------------------------
# Each returns (lhs, rhs); verify() compares them.  `mutant` names an active
# right-hand-side mutation or is None.

def _check_t1(point, cache, mutant):
    n, x = point["n"], point["x"]
    if n < 0:
        raise Rejected("degree must be >= 0")
    return cache.euler_poly(n, x), cache.euler_poly_closed(n, x)


def _check_t2(point, cache, mutant):
    n, x = point["n"], point["x"]
    if n < 0:
        raise Rejected("degree must be >= 0")
    h = cache.params.h
    lhs = cache.reflected_euler_poly(n, 1 - x)
    sign = (-1) ** n
    if mutant == "t2-sign":
        sign = -sign
    rhs = cache.euler_poly(n, x) * cache.zeta * (sign * q_pow(n + h - 1))
    return lhs, rhs


def _check_t3(point, cache, mutant):
    n = point["n"]
    if n < 0:
        raise Rejected("degree must be >= 0")
    h = cache.params.h
    if n == 0:
        lhs = cache.euler_number(0) * (cache.one + cache.zeta * q_pow(h))
        rhs = cache.constant(RatFuncQ([1, 1]))
        return lhs, rhs
    lhs = cache.euler_poly(n, 1) * cache.zeta * q_pow(h) + cache.euler_number(n)
    return lhs, CycloRF.zero(cache.params.p, cache.params.m)


def _check_t4(point, cache, mutant):
    n = point["n"]
    if n < 1:
        raise Rejected("the shift identity requires n >= 1")
    h = cache.params.h
    lhs = cache.euler_poly(n, 2) * cache.zeta_power(2) * q_pow(2 * h)
    head = 2 * h + 1 if mutant == "t4-offset" else 2 * h
    tail = cache.zeta_power(2) * q_pow(head) + cache.zeta * q_pow(h)
    rhs = cache.euler_number(n) + cache.euler_number(0) * tail
    return lhs, rhs


def _check_t5(point, cache, mutant):
    n = point["n"]
    if n < 0:
        raise Rejected("degree must be >= 0")
    h = cache.params.h
    lhs = cache.integrate(MomentPoly.one_minus_t_power(n)) * cache.zeta * q_pow(h - 1)
    rhs = cache.reflected_euler_poly(n, 2)
    return lhs, rhs


def _check_c6(point, cache, mutant):
    n = point["n"]
    if n < 1:
        raise Rejected("the integral identity requires n >= 1")
    h = cache.params.h
    lhs = cache.integrate(MomentPoly.one_minus_t_power(n))
    e = h if mutant == "c6-exponent" else h + 1
    rhs = cache.reflected_euler(n) * cache.zeta * q_pow(e) + _rhs_tail(cache)
    return lhs, rhs


def _check_eq12(point, cache, mutant):
    n, k, x = point["n"], point["k"], point["x"]
    if not 0 <= k <= n:
        raise Rejected("need 0 <= k <= n")
    lhs = bernstein(k, n, x)
    rhs = bernstein(n - k, n, 1 - x).subst_q_inverse()
    return lhs, rhs


def _check_t7(point, cache, mutant):
    n, k = point["n"], point["k"]
    if not (0 <= k < n):
        raise Rejected("the basis integral identity requires 0 <= k < n")
    h = cache.params.h
    lhs = cache.integrate(bernstein_moment_poly(k, n))
    if k == 0:
        rhs = cache.reflected_euler(n) * cache.zeta * q_pow(h + 1) + _rhs_tail(cache)
    else:
        core = cache.reflected_alternating_sum(n, k)
        sign = (-1) ** k if mutant == "t7-parity" else 1
        rhs = core * cache.zeta * (sign * math.comb(n, k) * q_pow(h + 1))
    return lhs, rhs


def _product_moment(k: int, degrees) -> MomentPoly:
    if any(k > n for n in degrees):
        # a factor with k > n is identically zero (its binomial vanishes)
        return MomentPoly(())
    mp = bernstein_moment_poly(k, degrees[0])
    for n in degrees[1:]:
        mp = mp * bernstein_moment_poly(k, n)
    return mp


def _check_product(point, cache, mutant, twist_mutant_active):
    """Shared body of the two- and s-fold product identities."""
    k, ns = point["k"], tuple(point["ns"])
    s = len(ns)
    total = sum(ns)
    if total <= s * k:
        raise Rejected(f"requires n_1 + ... + n_{s} > {s}k")
    h = cache.params.h
    lhs = cache.integrate(_product_moment(k, ns))
    zeta = cache.zeta_power(2) if twist_mutant_active else cache.zeta
    if k == 0:
        rhs = cache.reflected_euler(total) * zeta * q_pow(h + 1) + _rhs_tail(cache)
    else:
        coef = 1
        for n in ns:
            coef *= math.comb(n, k)
        core = cache.reflected_alternating_sum(total, s * k)
        rhs = core * zeta * (coef * q_pow(h + 1))
    return lhs, rhs


def _check_t8(point, cache, mutant):
    if len(point["ns"]) != 2:
        raise Rejected("the two-fold product identity takes exactly two degrees")
    return _check_product(point, cache, mutant, mutant == "t8-twist")


def _check_t10(point, cache, mutant):
    if len(point["ns"]) < 2:
        raise Rejected("the s-fold product identity requires s >= 2")
    return _check_product(point, cache, mutant, False)


def _moment_form(point, cache):
    """Shared body of the two moment-form corollaries (no binomial prefactors)."""
    k, ns = point["k"], tuple(point["ns"])
    s = len(ns)
    total = sum(ns)
    if total <= s * k:
        raise Rejected(f"requires n_1 + ... + n_{s} > {s}k")
    h = cache.params.h
    lhs = cache.integrate(
        MomentPoly.t_power(s * k) * MomentPoly.one_minus_t_power(total - s * k)
    )
    if k == 0:
        rhs = cache.reflected_euler(total) * cache.zeta * q_pow(h + 1) + _rhs_tail(cache)
    else:
        core = cache.reflected_alternating_sum(total, s * k)
        rhs = core * cache.zeta * q_pow(h + 1)
    return lhs, rhs


def _check_c9(point, cache, mutant):
    if len(point["ns"]) != 2:
        raise Rejected("the two-fold moment form takes exactly two degrees")
    return _moment_form(point, cache)


def _check_c11(point, cache, mutant):
    if len(point["ns"]) < 2:
        raise Rejected("the s-fold moment form requires s >= 2")
    return _moment_form(point, cache)


def _check_lemma(point, cache, mutant):
    x = point["x"]
    lhs = q_number_inv_arg(1 - x)
    rhs = RatFuncQ(1) - q_number(x)
    return lhs, rhs


_CHECKERS = {
    "T1_CLOSED_EQ_EXPANSION": _check_t1,
    "T2_REFLECTION": _check_t2,
    "T3_RECURRENCE": _check_t3,
    "T4_SHIFT2": _check_t4,
    "T5_REFLECT_INTEGRAL": _check_t5,
    "C6_INTEGRAL": _check_c6,
    "EQ12_SYMMETRY": _check_eq12,
    "T7_BERNSTEIN_INTEGRAL": _check_t7,
    "T8_PRODUCT2": _check_t8,
    "C9_MOMENT_FORM": _check_c9,
    "T10_PRODUCT_S": _check_t10,
    "C11_MOMENT_FORM_S": _check_c11,
    "LEMMA_COMPLEMENT": _check_lemma,
}

# theorems whose sides are plain rational functions, no ring parameters
_Q_ONLY = {"EQ12_SYMMETRY", "LEMMA_COMPLEMENT"}


def _serialize_side(v) -> str:
    return v.to_text()


def verify(
    theorem: str,
    point: dict,
    workspace: Workspace | None = None,
    mutant: str | None = None,
) -> IdentityReport:
    """Evaluate one identity at one parameter point."""
    if theorem not in _CHECKERS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    if mutant is not None and mutant not in MUTANTS:
        raise ValueError(f"unknown mutant {mutant!r}")
    workspace = workspace or Workspace()
    cache = None if theorem in _Q_ONLY else workspace.cache(_params_of(point))
    note = C9_NOTE if theorem == "C9_MOMENT_FORM" else None
    start = time.perf_counter()
    try:
        lhs, rhs = _CHECKERS[theorem](point, cache, mutant)
    except Rejected as why:
        return IdentityReport(
            theorem, dict(point), "rejected",
            elapsed=time.perf_counter() - start, note=str(why),
        )
    elapsed = time.perf_counter() - start
    if lhs == rhs:
        return IdentityReport(theorem, dict(point), "passed", elapsed=elapsed, note=note)
    return IdentityReport(
        theorem, dict(point), "failed",
        lhs=_serialize_side(lhs), rhs=_serialize_side(rhs),
        elapsed=elapsed, note=note,
    )


def _points_for(theorem: str, grid: GridSpec):
    """Deterministic, side-condition-respecting point enumeration."""
    if theorem == "LEMMA_COMPLEMENT":
        for x in grid.x_range:
            yield {"x": x}
        return
    if theorem == "EQ12_SYMMETRY":
        for n in range(grid.n_max + 1):
            for k in range(n + 1):
                for x in grid.x_range:
                    yield {"n": n, "k": k, "x": x}
        return
    for params in grid.param_triples():
        base = {"p": params.p, "m": params.m, "h": params.h}
        if theorem in ("T1_CLOSED_EQ_EXPANSION", "T2_REFLECTION"):
            for n in range(grid.n_max + 1):
                for x in grid.x_range:
                    yield {**base, "n": n, "x": x}
        elif theorem in ("T3_RECURRENCE", "T5_REFLECT_INTEGRAL"):
            for n in range(grid.n_max + 1):
                yield {**base, "n": n}
        elif theorem in ("T4_SHIFT2", "C6_INTEGRAL"):
            for n in range(1, grid.n_max + 1):
                yield {**base, "n": n}
        elif theorem == "T7_BERNSTEIN_INTEGRAL":
            for n in range(1, grid.n_max + 1):
                for k in range(n):
                    yield {**base, "n": n, "k": k}
        elif theorem in ("T8_PRODUCT2", "C9_MOMENT_FORM"):
            for ns in _sorted_tuples(2, grid.ni_max):
                for k in range((sum(ns) - 1) // 2 + 1):
                    yield {**base, "k": k, "ns": ns}
        elif theorem in ("T10_PRODUCT_S", "C11_MOMENT_FORM_S"):
            for s in grid.s_values:
                for ns in _sorted_tuples(s, grid.ni_max):
                    for k in range((sum(ns) - 1) // s + 1):
                        yield {**base, "s": s, "k": k, "ns": ns}
        else:  # pragma: no cover
            raise AssertionError(theorem)


def _sorted_tuples(s: int, ni_max: int):
    """Non-decreasing degree tuples with a positive total (the integrands are
    symmetric in the factors, so sorted tuples cover every product)."""

    def rec(prefix, lo):
        if len(prefix) == s:
            if sum(prefix) > 0:
                yield tuple(prefix)
            return
        for v in range(lo, ni_max + 1):
            yield from rec(prefix + [v], v)

    yield from rec([], 0)


def run_grid(
    grid: GridSpec | None = None,
    workspace: Workspace | None = None,
    mutant: str | None = None,
    fail_fast: bool = False,
):
    """Verify every theorem over the grid; returns (reports, summary)."""
    grid = grid or default_grid()
    workspace = workspace or Workspace()
    reports: list[IdentityReport] = []
    by_theorem: dict[str, dict[str, int]] = {}
    start = time.perf_counter()
    stop = False
    for theorem in THEOREM_IDS:
        if theorem not in grid.theorems or stop:
            continue
        counts = by_theorem.setdefault(
            theorem, {"passed": 0, "failed": 0, "rejected": 0}
        )
        for point in _points_for(theorem, grid):
            rep = verify(theorem, point, workspace, mutant)
            reports.append(rep)
            counts[rep.status] += 1
            if fail_fast and rep.status == "failed":
                stop = True
                break
    summary = {
        "total": len(reports),
        "passed": sum(1 for r in reports if r.status == "passed"),
        "failed": sum(1 for r in reports if r.status == "failed"),
        "rejected": sum(1 for r in reports if r.status == "rejected"),
        "elapsed": time.perf_counter() - start,
        "by_theorem": by_theorem,
        "mutant": mutant,
    }
    return reports, summary


def summary_table(summary: dict) -> str:
    lines = [
        f"{'theorem':<24} {'passed':>8} {'failed':>8} {'rejected':>8}",
        "-" * 52,
    ]
    for theorem, counts in summary["by_theorem"].items():
        lines.append(
            f"{theorem:<24} {counts['passed']:>8} {counts['failed']:>8} "
            f"{counts['rejected']:>8}"
        )
    lines.append("-" * 52)
    lines.append(
        f"{'total':<24} {summary['passed']:>8} {summary['failed']:>8} "
        f"{summary['rejected']:>8}   ({summary['elapsed']:.1f}s)"
    )
    if summary.get("mutant"):
        lines.append(f"active mutant: {summary['mutant']}")
    return "\n".join(lines)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1)


def numeric_crosscheck(
    n_max: int,
    params: EulerParams,
    cfg: PadicConfig,
    levels,
    cache: EulerCache | None = None,
) -> dict:
    """Compare the exact Euler numbers, specialized at q0, against the
    truncated integral; reports the valuation of the difference per level."""
    levels = tuple(levels)
    cache = cache if cache is not None else EulerCache(params)
    rows = []
    all_ok = True
    for n in range(n_max + 1):
        exact = specialize(cache.euler_number(n), cfg)
        vals = []
        for N in levels:
            approx = fermionic_integral_truncated(n, params, cfg, N)
            vals.append((exact - approx).valuation())
        ok = all(a <= b for a, b in zip(vals, vals[1:]))
        all_ok = all_ok and ok
        rows.append({"n": n, "valuations": vals, "non_decreasing": ok})
    return {
        "params": {"p": params.p, "m": params.m, "h": params.h},
        "config": {"p": cfg.p, "K": cfg.K, "m": cfg.m, "q0": cfg.q0},
        "levels": list(levels),
        "rows": rows,
        "all_non_decreasing": all_ok,
    }
