"""Cross-checks of the orbit/Schur multiplicities against the oracles.

Each case is one (n, dominant weight).  Checks run per oracle family:

kostka       solver rows == tableau counts
freudenthal  solver rows == Freudenthal recursion
weyl         A(rho+L)/A(rho) == sum m_q ChW(q) == S_(L) in u;
             dimension == hook-content == ratio at u = 1
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from types import SimpleNamespace

from .multiplicity import InternalInconsistency, MultiplicityTable, dimension, solve_multiplicities
from .oracles import freudenthal, hook_content_dim, kostka_table, weyl_character_ratio
from .orbits import orbit_character_u, reduce_u
from .polyring import ExactPoly, poly_eval
from .symfunc import degenerated_schur, printed_recursion_schur, schur_of_partition, x_to_u
from .weights import DominantWeight, sub_dominant_set

ORACLES = ("kostka", "freudenthal", "weyl")

# Test hook: name an oracle here to corrupt its output and exercise the
# mismatch path end to end.
FAULT_ENV = "WEYLCHAR_FAULT_INJECT"


@dataclass
class CaseResult:
    rank_n: int
    partition: tuple[int, ...]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self, oracles) -> str:
        label = f"A{self.rank_n - 1} ({','.join(map(str, self.partition))})"
        if self.ok:
            return f"PASS {label} [{' '.join(oracles)}]"
        return f"FAIL {label} " + "; ".join(self.failures)


def sweep_cases(n_max: int, m_max: int) -> list[DominantWeight]:
    """Every dominant weight in Sub(M lambda_1) for 2 <= n <= n_max, 1 <= M <= m_max."""
    cases = []
    for n in range(2, n_max + 1):
        seen = set()
        for m in range(1, m_max + 1):
            for w in sub_dominant_set(n, m):
                if w.partition not in seen:
                    seen.add(w.partition)
                    cases.append(w)
    return cases


def _corrupt(table: MultiplicityTable) -> SimpleNamespace:
    # bypasses table validation on purpose; only .rows is compared
    rows = list(table.rows)
    q, m = rows[-1]
    rows[-1] = (q, m + 1)
    return SimpleNamespace(rows=tuple(rows))


def _maybe_corrupt(name: str, table: MultiplicityTable) -> MultiplicityTable:
    if os.environ.get(FAULT_ENV) == name:
        return _corrupt(table)
    return table


def _diff(a: MultiplicityTable, b: MultiplicityTable) -> str:
    bad = [(q, x, y) for (q, x), (_, y) in zip(a.rows, b.rows) if x != y]
    q, x, y = bad[0]
    return f"{len(bad)} rows differ, first ({','.join(map(str, q))}): {x} vs {y}"


def check_case(lam: DominantWeight, oracles=ORACLES) -> CaseResult:
    n = lam.rank_n
    result = CaseResult(n, lam.partition)
    try:
        table = solve_multiplicities(n, lam)
    except InternalInconsistency as exc:
        result.failures.append(f"solver: {exc}")
        return result
    if "kostka" in oracles:
        other = _maybe_corrupt("kostka", kostka_table(n, lam))
        if other.rows != table.rows:
            result.failures.append("kostka: " + _diff(table, other))
    if "freudenthal" in oracles:
        try:
            other = _maybe_corrupt("freudenthal", freudenthal(n, lam))
        except InternalInconsistency as exc:
            result.failures.append(f"freudenthal: {exc}")
        else:
            if other.rows != table.rows:
                result.failures.append("freudenthal: " + _diff(table, other))
    if "weyl" in oracles:
        result.failures.extend(_check_weyl(lam, table))
    return result


def _check_weyl(lam: DominantWeight, table: MultiplicityTable) -> list[str]:
    n = lam.rank_n
    failures = []
    try:
        ratio = weyl_character_ratio(n, lam)
    except InternalInconsistency as exc:
        return [f"weyl: {exc}"]
    if os.environ.get(FAULT_ENV) == "weyl":
        ratio = ratio + ExactPoly.constant(n)
    orbit_sum = ExactPoly.zero(n)
    for q, m in table.rows:
        if m:
            orbit_sum = orbit_sum + orbit_character_u(q, n) * m
    if ratio != orbit_sum:
        failures.append("weyl: character ratio differs from the orbit sum")
    # A(rho+L) = A(rho) S_(L) modulo u_1...u_N = 1; the quotient ring is a
    # domain, so comparing the exact quotient with S_(L) is equivalent
    if ratio != reduce_u(x_to_u(schur_of_partition(n, lam.partition), n)):
        failures.append("weyl: A(rho+L) / A(rho) != S_(L)")
    dims = (dimension(n, lam, table), hook_content_dim(n, lam.partition), poly_eval(ratio, [1] * n))
    if len(set(dims)) != 1:
        failures.append(f"weyl: dimensions disagree {dims}")
    return failures


def _run(args):
    lam, oracles = args
    return check_case(lam, oracles)


def run_sweep(n_max: int, m_max: int, oracles=ORACLES, jobs: int = 1) -> list[CaseResult]:
    cases = [(lam, tuple(oracles)) for lam in sweep_cases(n_max, m_max)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, cases, chunksize=4))
    return [_run(c) for c in cases]


def compare_printed_recursion(n_max: int, m_max: int) -> list[tuple[int, int, bool]]:
    """Does the recursion as typeset reproduce S_M?  One entry per (n, m)."""
    out = []
    for n in range(2, n_max + 1):
        for m in range(n, m_max + 1):
            out.append((n, m, printed_recursion_schur(n, m) == degenerated_schur(n, m)))
    return out
