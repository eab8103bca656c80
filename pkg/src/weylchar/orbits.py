"""Weyl orbits of A_{N-1} as permutation sets, orbit characters, signatures."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .polyring import ExactPoly

__all__ = [
    "multiset_permutations",
    "weyl_orbit",
    "orbit_character_u",
    "reduce_u",
    "signature",
]


def multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of *items* in descending lexicographic order."""
    a = sorted(items, reverse=True)
    n = len(a)
    while True:
        yield tuple(a)
        # next permutation in descending order
        i = n - 2
        while i >= 0 and a[i] <= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] >= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def weyl_orbit(q: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """All distinct permutations of the n parts of *q* (dominant element first)."""
    q = tuple(q)
    if len(q) != n:
        raise ValueError(f"expected {n} parts, got {q}")
    return list(multiset_permutations(q))


def reduce_u(p: ExactPoly) -> ExactPoly:
    """Canonical form modulo u_1 ... u_N = 1: drop the common minimum exponent
    of every monomial."""

    def shift(e, c):
        low = min(e) if e else 0
        return tuple(a - low for a in e), c

    return p.map_terms(shift)


def orbit_character_u(q: Sequence[int], n: int, reduced: bool = True) -> ExactPoly:
    """Sum of u^w over the orbit of *q*; canonical mod u_1...u_N = 1 unless
    ``reduced`` is false."""
    terms = {w: Fraction(1) for w in weyl_orbit(q, n)}
    p = ExactPoly(n, terms)
    return reduce_u(p) if reduced else p


def signature(perm: Sequence) -> int:
    """Sign of the permutation taking the descending arrangement of *perm* to *perm*.

    Descending order has signature +1.
    """
    perm = tuple(perm)
    if len(set(perm)) != len(perm):
        raise ValueError(f"signature undefined for repeated entries: {perm}")
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] < perm[j]
    )
    return -1 if inversions % 2 else 1

