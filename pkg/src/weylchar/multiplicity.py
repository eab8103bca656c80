"""Weight multiplicities by equating the orbit expansion of a character with
its Schur function.

For a dominant weight of weight M the character is
sum_q m_q K_(q), with q over Sub(M lambda_1).  Each class function is
written in x_1..x_{N-1} (power sums, then elimination of x_N, x_{N+1}, ...),
the right side is the degenerated Schur function S_(Lambda), and matching
coefficients of every monomial gives a square, uniquely solvable system.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linsolve import SingularSystem, solve_exact
from .polyring import ExactPoly
from .symfunc import class_to_power, degenerate, power_to_x, schur_of_partition
from .weights import DominantWeight, Partition, orbit_size, sub_dominant_set

__all__ = [
    "InternalInconsistency",
    "MultiplicityTable",
    "CharacterRow",
    "class_function_x",
    "solve_multiplicities",
    "character",
    "dimension",
]


class InternalInconsistency(RuntimeError):
    """A result violated a guaranteed property; indicates a bug."""


@dataclass(frozen=True)
class MultiplicityTable:
    rank_n: int
    dominant: DominantWeight
    rows: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        sub = {w.partition for w in sub_dominant_set(self.rank_n, self.dominant.weight)}
        seen = set()
        for q, m in self.rows:
            if q not in sub:
                raise ValueError(f"{q} is not in Sub({self.dominant.weight} lambda_1)")
            if q in seen:
                raise ValueError(f"duplicate row {q}")
            seen.add(q)
            if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                raise ValueError(f"multiplicity of {q} is not a non-negative integer: {m!r}")
        if dict(self.rows).get(self.dominant.partition) != 1:
            raise ValueError("the highest weight must have multiplicity 1")

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.rows)

    def __getitem__(self, q: Partition) -> int:
        return dict(self.rows)[tuple(q)]


@dataclass(frozen=True)
class CharacterRow:
    partition: Partition
    multiplicity: int
    orbit_size: int

    @property
    def dynkin(self) -> tuple[int, ...]:
        p = self.partition
        return tuple(p[i] - p[i + 1] for i in range(len(p) - 1))


def class_function_x(n: int, lifted: Partition) -> ExactPoly:
    """K_(lifted) written in x_1..x_{n-1}."""
    return _class_function_x(n, tuple(lifted))


@lru_cache(maxsize=None)
def _class_function_x(n: int, lifted: Partition) -> ExactPoly:
    parts = tuple(v for v in lifted if v)
    if not parts:
        return ExactPoly.constant(n - 1)
    return degenerate(power_to_x(class_to_power(parts)), n)


@lru_cache(maxsize=None)
def _left_side(n: int, m: int):
    sub = sub_dominant_set(n, m)
    keys = [w.partition for w in sub]
    polys = [class_function_x(n, sub.lifted(w)) for w in sub]
    return keys, polys


def _as_weight(n: int, dominant) -> DominantWeight:
    if isinstance(dominant, DominantWeight):
        if dominant.rank_n != n:
            raise ValueError(f"dominant weight has rank {dominant.rank_n}, expected {n}")
        return dominant
    return DominantWeight(n, tuple(dominant))


def solve_multiplicities(n: int, dominant) -> MultiplicityTable:
    """Multiplicities of every member of Sub(M lambda_1) in R(dominant)."""
    lam = _as_weight(n, dominant)
    m = lam.weight
    keys, polys = _left_side(n, m)
    rhs = schur_of_partition(n, lam.partition)
    monomials = set(rhs.terms)
    for p in polys:
        monomials.update(p.terms)
    order = sorted(monomials, key=lambda e: (-sum(e), tuple(-a for a in e)))
    a = [[p.coeff(e) for p in polys] for e in order]
    b = [rhs.coeff(e) for e in order]
    try:
        x = solve_exact(a, b)
    except SingularSystem as exc:
        raise InternalInconsistency(f"multiplicity system for {lam.partition}: {exc}") from exc
    rows = []
    for q, v in zip(keys, x):
        if v.denominator != 1 or v < 0:
            raise InternalInconsistency(f"multiplicity of {q} is {v}, not a non-negative integer")
        rows.append((q, int(v)))
    try:
        return MultiplicityTable(n, lam, tuple(rows))
    except ValueError as exc:
        raise InternalInconsistency(str(exc)) from exc


def character(n: int, dominant, table: MultiplicityTable | None = None) -> list[CharacterRow]:
    """Rows (partition, multiplicity, orbit size) of the orbit decomposition."""
    if table is None:
        table = solve_multiplicities(n, dominant)
    return [CharacterRow(q, mult, orbit_size(q, n)) for q, mult in table.rows]


def dimension(n: int, dominant, table: MultiplicityTable | None = None) -> int:
    return sum(r.multiplicity * r.orbit_size for r in character(n, dominant, table))
