"""Partitions, dominant weights of A_{N-1} and the set Sub(M lambda_1).

A dominant weight is written in the permutation basis mu_1..mu_N as a
partition (q_1 >= ... >= q_N >= 0).  Since mu_1 + ... + mu_N = 0, partitions
differing by a constant shift are the same weight; the canonical
representative has q_N = 0.  Dynkin labels are a_i = q_i - q_{i+1}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "DominantWeight",
    "SubSet",
    "partitions_of",
    "canonicalize",
    "sub_dominant_set",
    "dynkin_to_partition",
    "partition_to_dynkin",
    "orbit_size",
    "dominates",
    "pad",
]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate *parts* as a non-increasing tuple of non-negative ints."""
    p = tuple(int(v) for v in parts)
    if any(v < 0 for v in p):
        raise ValueError(f"partition has a negative part: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition is not non-increasing: {p}")
    return p


def pad(p: Sequence[int], n: int) -> Partition:
    """Pad *p* with zeros (or drop trailing zeros) to exactly *n* entries."""
    p = tuple(p)
    if len(p) > n:
        if any(p[n:]):
            raise ValueError(f"partition {p} has more than {n} nonzero parts")
        return p[:n]
    return p + (0,) * (n - len(p))


def _key(p: Partition) -> tuple:
    # number of nonzero parts first, then reverse-lex
    return (sum(1 for v in p if v), tuple(-v for v in p))


@lru_cache(maxsize=None)
def _partitions(m: int, max_parts: int, largest: int) -> tuple[Partition, ...]:
    if m == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int, max_parts: int) -> list[Partition]:
    """All partitions of *m* into at most *max_parts* parts, zero padded.

    Ordered by number of nonzero parts, then reverse lexicographically,
    which is the listing order used for Sub(M lambda_1).

    >>> partitions_of(4, 2)
    [(4, 0), (3, 1), (2, 2)]
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if max_parts < 1:
        raise ValueError(f"max_parts must be at least 1, got {max_parts}")
    parts = [pad(p, max_parts) for p in _partitions(m, max_parts, m)]
    return sorted(parts, key=_key)


def canonicalize(p: Sequence[int], n: int) -> Partition:
    """Shift *p* (exactly *n* parts) so that its last part is zero."""
    p = tuple(p)
    if len(p) != n:
        raise ValueError(f"expected {n} parts, got {p}")
    low = p[-1]
    return tuple(v - low for v in p)


def partition_to_dynkin(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[i] - p[i + 1] for i in range(len(p) - 1))


def dynkin_to_partition(n: int, labels: Sequence[int]) -> Partition:
    """Partition (q_N = 0) of the dominant weight sum a_i lambda_i."""
    labels = tuple(int(a) for a in labels)
    if len(labels) != n - 1:
        raise ValueError(f"A{n - 1} needs {n - 1} Dynkin labels, got {len(labels)}")
    if any(a < 0 for a in labels):
        raise ValueError(f"Dynkin labels must be non-negative: {labels}")
    q = [0] * n
    for i in range(n - 2, -1, -1):
        q[i] = q[i + 1] + labels[i]
    return tuple(q)


@dataclass(frozen=True)
class DominantWeight:
    """Dominant weight of A_{N-1}, stored in canonical form (last part 0)."""

    rank_n: int
    partition: Partition

    def __post_init__(self):
        if self.rank_n < 2:
            raise ValueError(f"rank_n must be at least 2, got {self.rank_n}")
        p = canonicalize(pad(as_partition(self.partition), self.rank_n), self.rank_n)
        object.__setattr__(self, "partition", p)

    @classmethod
    def from_dynkin(cls, n: int, labels: Sequence[int]) -> "DominantWeight":
        return cls(n, dynkin_to_partition(n, labels))

    @property
    def dynkin(self) -> tuple[int, ...]:
        return partition_to_dynkin(self.partition)

    @property
    def weight(self) -> int:
        return sum(self.partition)

    @property
    def algebra(self) -> str:
        return f"A{self.rank_n - 1}"


@dataclass(frozen=True)
class SubSet:
    """Sub(M lambda_1): canonical dominant weights of weights M, M-N, M-2N, ..."""

    rank_n: int
    weight_m: int
    members: tuple[DominantWeight, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def partitions(self) -> list[Partition]:
        return [w.partition for w in self.members]

    def level(self, w: DominantWeight) -> int:
        """The k with weight(w) = M - k N."""
        return (self.weight_m - w.weight) // self.rank_n

    def lifted(self, w: DominantWeight) -> Partition:
        """Representative of *w* of weight exactly M (add k to each part)."""
        k = self.level(w)
        return tuple(v + k for v in w.partition)


@lru_cache(maxsize=None)
def sub_dominant_set(n: int, m: int) -> SubSet:
    """The dominant weights of Sub(m lambda_1) for A_{n-1}.

    A partition of m - kn with n nonzero parts canonicalizes to one of
    m - (k+1)n, so the members are exactly the partitions of m - kn with at
    most n - 1 nonzero parts.  Blocks come in order of increasing k.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    members: list[DominantWeight] = []
    seen: set[Partition] = set()
    k = 0
    while k * n <= m:
        for p in partitions_of(m - k * n, n):
            c = canonicalize(p, n)
            if c in seen:
                continue
            # canonical weights of a lower block are listed with that block
            if sum(c) != m - k * n:
                continue
            seen.add(c)
            members.append(DominantWeight(n, c))
        k += 1
    return SubSet(n, m, tuple(members))


def orbit_size(p: Sequence[int], n: int) -> int:
    """Number of distinct permutations of the n parts of *p*."""
    if len(p) != n:
        raise ValueError(f"expected {n} parts, got {tuple(p)}")
    size = factorial(n)
    for c in Counter(p).values():
        size //= factorial(c)
    return size


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when mu <= lam in dominance order (equal sums, partial sums bounded)."""
    if sum(lam) != sum(mu):
        return False
    width = max(len(lam), len(mu))
    a = tuple(lam) + (0,) * (width - len(lam))
    b = tuple(mu) + (0,) * (width - len(mu))
    s = t = 0
    for x, y in zip(a, b):
        s += x
        t += y
        if t > s:
            return False
    return True
