"""Autotomous subsets, strict descent of the dual map along Levi-regular orbits, and theta genericity."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .duality import d_bv, levi_regular_dual_orbit, regular_dual_orbit, regular_orbit
from .partitions import Partition, dominates
from .root_systems import (
    CartanType,
    CoverParams,
    LeviSubset,
    all_levi_subsets,
    component_type,
    max_exponent,
)


class LeviAnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class AutotomyVerdict:
    subset: LeviSubset
    autotomous: bool
    beta: Optional[int] = None
    component: Optional[tuple[int, ...]] = None
    component_type: Optional[tuple[str, int]] = None

    def __bool__(self) -> bool:
        return self.autotomous


def component_max_exponent(t: CartanType, comp: tuple[int, ...]) -> int:
    return max_exponent(LeviSubset(t, frozenset(comp)))


def is_autotomous(c: CoverParams, S: LeviSubset) -> AutotomyVerdict:
    """Whether some beta outside S has a component S_j of S + {beta} with n_kappa >= e(S_j) + 1.

    Only components containing beta can change, so only those are examined; the
    components already in S are covered as well because they stay components of S + {beta}.
    """
    t = c.cartan
    nk = c.n_kappa
    if c.family == "G2":
        from .g2 import G2Error  # noqa: F401  (G2 handled by the clause below)

        return _g2_autotomous(c, S)
    for beta in sorted(set(range(1, t.rank + 1)) - S.indices):
        bigger = S | {beta}
        for comp in bigger.components():
            e = component_max_exponent(t, comp)
            if nk >= e + 1:
                return AutotomyVerdict(S, True, beta, comp, component_type(t, comp))
    return AutotomyVerdict(S, False)


def _g2_autotomous(c: CoverParams, S: LeviSubset) -> AutotomyVerdict:
    """Clause (i) for G2; the exceptional clause needs an orthogonal A_{k+1} extension, which G2 lacks."""
    t = c.cartan
    for beta in sorted({1, 2} - S.indices):
        bigger = S | {beta}
        for comp in bigger.components():
            e = component_max_exponent(t, comp)
            if c.n_kappa >= e + 1:
                return AutotomyVerdict(S, True, beta, comp, component_type(t, comp))
    return AutotomyVerdict(S, False)


def property_P(c: CoverParams, S: LeviSubset) -> bool:
    """For every beta outside S and every component S_j of S + {beta}: n_kappa <= e(S_j)."""
    t = c.cartan
    return all(
        c.n_kappa <= component_max_exponent(t, comp)
        for beta in set(range(1, t.rank + 1)) - S.indices
        for comp in (S | {beta}).components()
    )


# ---------------------------------------------------------------------------
# strict descent

STRICT, EQUAL, REVERSED, INCOMPARABLE = "strict", "equal", "reversed", "incomparable"


def levi_dual_value(c: CoverParams, S: LeviSubset) -> Partition:
    return d_bv(c, levi_regular_dual_orbit(c, S)).unlabelled()


def strict_descent_outcome(c: CoverParams, S: LeviSubset, S2: LeviSubset) -> str:
    """Compare d_bv of the Levi-regular dual orbits of S and of a strictly larger S2."""
    if not (S.indices < S2.indices):
        raise LeviAnalysisError(f"{sorted(S2.indices)} does not strictly contain {sorted(S.indices)}")
    small = levi_dual_value(c, S)
    big = levi_dual_value(c, S2)
    if small == big:
        return EQUAL
    if dominates(small, big):
        return STRICT
    if dominates(big, small):
        return REVERSED
    return INCOMPARABLE


def strict_descent_holds(c: CoverParams, S: LeviSubset, S2: LeviSubset) -> bool:
    return strict_descent_outcome(c, S, S2) == STRICT


@dataclass(frozen=True)
class DescentRecord:
    cover: str
    S: tuple[int, ...]
    S2: tuple[int, ...]
    autotomous: bool
    outcome: str

    def as_dict(self) -> dict:
        return {"cover": self.cover, "S": list(self.S), "S2": list(self.S2), "autotomous": self.autotomous, "outcome": self.outcome}


@dataclass
class DescentReport:
    family: str
    rank_bound: int
    n_bound: int
    checked: int = 0
    violations: list = field(default_factory=list)
    informational: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and self.checked > 0


def _sweep_one(args) -> tuple[int, list, list]:
    family, rank, nk, full = args
    c = CoverParams.of(family, rank, nk)
    t = c.cartan
    checked, violations, info = 0, [], []
    subsets = all_levi_subsets(t)
    for S in subsets:
        verdict = is_autotomous(c, S)
        if full:
            targets = [S2 for S2 in subsets if S.indices < S2.indices]
        else:
            targets = [S | {b} for b in sorted(set(range(1, rank + 1)) - S.indices)]
        for S2 in targets:
            outcome = strict_descent_outcome(c, S, S2)
            rec = DescentRecord(str(c), tuple(sorted(S.indices)), tuple(sorted(S2.indices)), verdict.autotomous, outcome)
            if verdict.autotomous:
                if outcome != STRICT:
                    info.append(rec)
                continue
            checked += 1
            if outcome != STRICT:
                violations.append(rec)
    return checked, violations, info


def sweep_strict_descent(family: str, rank_bound: int, n_bound: int, full: bool = False, jobs: int = 1) -> DescentReport:
    """Strict descent for every non-autotomous S and every one-step (or, with full, every) extension."""
    lo = 2 if family == "D" else 1
    tasks = [(family, r, nk, full) for r in range(lo, rank_bound + 1) for nk in range(1, n_bound + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_one, tasks))
    else:
        results = [_sweep_one(t) for t in tasks]
    report = DescentReport(family, rank_bound, n_bound)
    for checked, violations, info in results:
        report.checked += checked
        report.violations.extend(violations)
        report.informational.extend(info)
    return report


# ---------------------------------------------------------------------------
# theta genericity


def theta_nongeneric(c: CoverParams) -> bool:
    """Whether the dual of the regular dual orbit is strictly below the regular orbit."""
    if c.family == "G2":
        from .g2 import G2Orbit, g2_dbv

        return g2_dbv(c.n_kappa, "G2") < G2Orbit("G2")
    top = regular_orbit(c.family, c.rank)
    return d_bv(c, regular_dual_orbit(c)).unlabelled() != top


def table1_threshold(family: str, rank: int, n_kappa: int) -> bool:
    """Closed-form nongenericity criterion for classical groups."""
    r, nk = rank, n_kappa
    if family == "A":
        return nk <= r
    odd = nk % 2 == 1
    if family == "B":
        return nk <= 2 * r - 1 if odd else nk <= 2 * r
    if family == "C":
        return nk <= 2 * r - 1 if odd else nk // 2 <= 2 * r - 2
    if family == "D":
        return nk <= 2 * r - 3 if odd else nk <= 2 * r - 4
    raise LeviAnalysisError(f"no closed form for {family}")


def table2_g2(n_kappa: int) -> bool:
    return n_kappa <= 5 or n_kappa in (6, 9)
