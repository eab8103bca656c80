"""Independent routes to the same answers, used to check the main computation.

None of these touch the Schur/class-function machinery: Kostka numbers by
tableau enumeration, Freudenthal's recursion, the hook-content formula, and
the Weyl character formula as a quotient of alternants in u_1..u_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .multiplicity import InternalInconsistency, MultiplicityTable, _as_weight
from .orbits import multiset_permutations, reduce_u, signature
from .polyring import ExactPoly, InexactDivision, poly_det, poly_divide_exact
from .weights import dominates, sub_dominant_set

__all__ = [
    "RootSystemA",
    "kostka_ssyt",
    "kostka_table",
    "freudenthal",
    "hook_content_dim",
    "alternant",
    "bialternant",
    "vandermonde",
    "weyl_character_ratio",
]


@dataclass(frozen=True)
class RootSystemA:
    """Root data of A_{N-1} in the coordinates of mu_1..mu_N."""

    rank_n: int

    @property
    def positive_roots(self) -> list[tuple[int, ...]]:
        n = self.rank_n
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                r = [0] * n
                r[i], r[j] = 1, -1
                roots.append(tuple(r))
        return roots

    @property
    def weyl_vector(self) -> tuple[int, ...]:
        return tuple(range(self.rank_n - 1, -1, -1))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        # Euclidean product of the trace-zero projections
        n = self.rank_n
        return Fraction(sum(x * y for x, y in zip(a, b))) - Fraction(sum(a) * sum(b), n)


def kostka_ssyt(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape *lam* and content *mu*.

    Cells are filled in reading order by backtracking, keeping rows weakly
    and columns strictly increasing.
    """
    shape = tuple(v for v in lam if v)
    content = [v for v in mu]
    if sum(shape) != sum(content):
        raise ValueError(f"weight mismatch: |{tuple(lam)}| != |{tuple(mu)}|")
    if any(v < 0 for v in shape) or any(v < 0 for v in content):
        raise ValueError("negative part")
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid: dict[tuple[int, int], int] = {}
    remaining = list(content)
    letters = len(content)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        low = 0
        if c > 0:
            low = grid[r, c - 1]
        if r > 0:
            low = max(low, grid[r - 1, c] + 1)
        total = 0
        for v in range(low, letters):
            if remaining[v]:
                remaining[v] -= 1
                grid[r, c] = v
                total += fill(k + 1)
                remaining[v] += 1
        grid.pop((r, c), None)
        return total

    return fill(0)


def kostka_table(n: int, dominant) -> MultiplicityTable:
    """Multiplicities via Kostka numbers K_{Lambda, lifted q}."""
    lam = _as_weight(n, dominant)
    sub = sub_dominant_set(n, lam.weight)
    rows = tuple((w.partition, kostka_ssyt(lam.partition, sub.lifted(w))) for w in sub)
    return MultiplicityTable(n, lam, rows)


def freudenthal(n: int, dominant) -> MultiplicityTable:
    """Multiplicities by Freudenthal's recursion, from the highest weight down.

    Weights are vectors of weight M in mu-coordinates; a non-dominant weight
    has the multiplicity of its sorted rearrangement.
    """
    lam = _as_weight(n, dominant)
    roots = RootSystemA(n)
    rho = roots.weyl_vector
    sub = sub_dominant_set(n, lam.weight)
    top = lam.partition

    def shifted_norm(v):
        w = tuple(a + b for a, b in zip(v, rho))
        return roots.inner(w, w)

    top_norm = shifted_norm(top)
    mult: dict[tuple[int, ...], int] = {}

    def lookup(v) -> int:
        s = tuple(sorted(v, reverse=True))
        if not dominates(top, s):
            return 0
        return mult[s]

    # reverse lexicographic order refines dominance, so every weight above
    # the current one has already been computed
    lifted = sorted((sub.lifted(w) for w in sub), reverse=True)
    for v in lifted:
        if not dominates(top, v):
            mult[v] = 0
            continue
        if v == top:
            mult[v] = 1
            continue
        acc = Fraction(0)
        for alpha in roots.positive_roots:
            k = 1
            while True:
                w = tuple(a + k * b for a, b in zip(v, alpha))
                if not dominates(top, tuple(sorted(w, reverse=True))):
                    break
                acc += roots.inner(w, alpha) * lookup(w)
                k += 1
        denom = top_norm - shifted_norm(v)
        value = 2 * acc / denom
        if value.denominator != 1 or value < 0:
            raise InternalInconsistency(f"Freudenthal gave {value} at {v}")
        mult[v] = int(value)
    rows = tuple((w.partition, mult[sub.lifted(w)]) for w in sub)
    return MultiplicityTable(n, lam, rows)


def hook_content_dim(n: int, lam: Sequence[int]) -> int:
    """Dimension of the GL_n irreducible with highest weight *lam*."""
    shape = [v for v in lam if v]
    if len(shape) > n:
        raise ValueError(f"{tuple(lam)} has more than {n} nonzero parts")
    conj = [sum(1 for v in shape if v > c) for c in range(shape[0])] if shape else []
    num = den = 1
    for r, length in enumerate(shape):
        for c in range(length):
            num *= n + c - r
            den *= (length - c) + (conj[c] - r) - 1
    if num % den:
        raise InternalInconsistency("hook-content quotient is not an integer")
    return num // den


def alternant(n: int, q: Sequence[int]) -> ExactPoly:
    """Signed orbit sum of u^w over the permutations w of *q* (distinct parts)."""
    q = tuple(q)
    if len(q) != n:
        raise ValueError(f"expected {n} parts, got {q}")
    if len(set(q)) != n:
        raise ValueError(f"alternant vanishes for repeated parts: {q}")
    return ExactPoly(n, {w: signature(w) * signature(q) for w in multiset_permutations(q)})


def bialternant(n: int, q: Sequence[int]) -> ExactPoly:
    """det[u_i^(q_j + n - j)] for a partition *q* with n parts."""
    q = tuple(q)
    if len(q) != n:
        raise ValueError(f"expected {n} parts, got {q}")
    matrix = [
        [ExactPoly.var(n, i, q[j] + n - 1 - j) for j in range(n)] for i in range(n)
    ]
    return poly_det(matrix, n)


@lru_cache(maxsize=None)
def vandermonde(n: int) -> ExactPoly:
    """prod_{i<j} (u_i - u_j)."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    out = ExactPoly.constant(n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (ExactPoly.var(n, i) - ExactPoly.var(n, j))
    return out


def weyl_character_ratio(n: int, dominant, reduced: bool = True) -> ExactPoly:
    """A(rho + Lambda) / A(rho) in u_1..u_N by exact division."""
    lam = _as_weight(n, dominant)
    shifted = tuple(a + b for a, b in zip(lam.partition, RootSystemA(n).weyl_vector))
    quotient = alternant(n, shifted)
    try:
        # one linear factor of the Vandermonde product at a time keeps the
        # intermediate remainders small
        for i in range(n):
            for j in range(i + 1, n):
                quotient = poly_divide_exact(quotient, ExactPoly.var(n, i) - ExactPoly.var(n, j))
    except InexactDivision as exc:
        raise InternalInconsistency(f"Weyl quotient for {lam.partition}: {exc}") from exc
    return reduce_u(quotient) if reduced else quotient

