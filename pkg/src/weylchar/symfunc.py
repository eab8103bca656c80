"""Schur functions, class functions and their degeneration for A_{N-1}.

Indeterminates x_1, x_2, ... are tied to power sums of u_1..u_N by
K_M = u_1^M + ... + u_N^M = M x_M, so the generic Schur function S_M(x) is
the complete symmetric function h_M(u).  Under u_1 ... u_N = 1 only
x_1..x_{N-1} stay independent; the degenerated S_M for M >= N is written in
those alone.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .polyring import (
    ExactPoly,
    poly_det,
    poly_sign_flip,
    poly_substitute_many,
)

__all__ = [
    "PowerSumExpr",
    "SchurTable",
    "generic_schur",
    "class_to_power",
    "power_to_x",
    "power_to_u",
    "x_to_u",
    "eliminate_x",
    "degenerate",
    "degenerated_schur",
    "printed_recursion_schur",
    "schur_of_partition",
    "elementary_in_x",
]


def generic_schur(m: int) -> ExactPoly:
    """S_m(x_1..x_m): the z^m coefficient of exp(sum x_i z^i).

    Uses m S_m = sum_{i=1}^m i x_i S_{m-i}.
    """
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")
    return _generic(m)


@lru_cache(maxsize=None)
def _generic(m: int) -> ExactPoly:
    if m == 0:
        return ExactPoly.constant(0)
    total = ExactPoly.zero(m)
    for i in range(1, m + 1):
        total = total + ExactPoly.var(m, i - 1) * _generic(m - i).embed(m) * i
    return total / m


class PowerSumExpr:
    """Linear combination of products of power sums K_{a_1} K_{a_2} ...

    Keys are descending tuples of positive integers; () is the constant 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, c in (terms or {}).items():
            key = tuple(sorted(key, reverse=True))
            if any(k <= 0 for k in key):
                raise ValueError(f"power-sum indices must be positive: {key}")
            v = clean.get(key, Fraction(0)) + Fraction(c)
            if v:
                clean[key] = v
            else:
                clean.pop(key, None)
        self.terms = clean

    def __eq__(self, other):
        return isinstance(other, PowerSumExpr) and self.terms == other.terms

    def __repr__(self):
        return f"PowerSumExpr({self.format()})"

    def __add__(self, other: "PowerSumExpr") -> "PowerSumExpr":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PowerSumExpr(out)

    def __sub__(self, other: "PowerSumExpr") -> "PowerSumExpr":
        return self + other.scale(-1)

    def scale(self, c) -> "PowerSumExpr":
        return PowerSumExpr({k: v * c for k, v in self.terms.items()})

    def times_generator(self, a: int) -> "PowerSumExpr":
        return PowerSumExpr({k + (a,): v for k, v in self.terms.items()})

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (-sum(k), [-v for v in k])):
            mono = "*".join(f"K{a}" for a in key) or "1"
            parts.append(f"{self.terms[key]}*{mono}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _augmented(parts: tuple[int, ...]) -> PowerSumExpr:
    # T_lam = sum over injective index maps of prod u_{j_i}^{lam_i}
    if len(parts) == 1:
        return PowerSumExpr({parts: 1})
    *rest, a = parts
    rest = tuple(rest)
    out = _augmented(_sorted(rest)).times_generator(a)
    for j in range(len(rest)):
        merged = list(rest)
        merged[j] += a
        out = out - _augmented(_sorted(merged))
    return out


def _sorted(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


def class_to_power(q: Sequence[int]) -> PowerSumExpr:
    """Expand the class function K_(q) (each distinct monomial once) in power sums.

    >>> class_to_power((2, 1)).format()
    '1*K2*K1 + -1*K3'
    """
    parts = tuple(q)
    if not parts:
        raise ValueError("class function needs at least one part")
    if any(v <= 0 for v in parts):
        raise ValueError(f"class function parts must be positive: {parts}")
    parts = _sorted(parts)
    norm = prod(factorial(c) for c in Counter(parts).values())
    return _augmented(parts).scale(Fraction(1, norm))


def power_to_x(e: PowerSumExpr, num_vars: int | None = None) -> ExactPoly:
    """Substitute K_M -> M x_M.  The result has as many variables as the
    largest index present, or *num_vars* if given."""
    top = max((max(k) for k in e.terms if k), default=0)
    n = top if num_vars is None else num_vars
    if n < top:
        raise ValueError(f"need at least {top} variables, got {n}")
    out: dict[tuple[int, ...], Fraction] = {}
    for key, c in e.terms.items():
        exps = [0] * n
        coeff = c
        for a in key:
            exps[a - 1] += 1
            coeff *= a
        t = tuple(exps)
        out[t] = out.get(t, 0) + coeff
    return ExactPoly(n, out)


def _power_sum_u(k: int, n: int) -> ExactPoly:
    return ExactPoly(n, {tuple(k if i == j else 0 for j in range(n)): 1 for i in range(n)})


def power_to_u(e: PowerSumExpr, n: int) -> ExactPoly:
    """Evaluate a power-sum expression in n concrete variables u_1..u_n."""
    out = ExactPoly.zero(n)
    for key, c in e.terms.items():
        term = ExactPoly.constant(n, c)
        for a in key:
            term = term * _power_sum_u(a, n)
        out = out + term
    return out


@lru_cache(maxsize=None)
def _x_power_u(k: int, a: int, n: int) -> ExactPoly:
    # (p_k / k)^a in u_1..u_n
    if a == 1:
        return _power_sum_u(k, n) / k
    return _x_power_u(k, a - 1, n) * _x_power_u(k, 1, n)


def x_to_u(p: ExactPoly, n: int) -> ExactPoly:
    """Translate a polynomial in x_k into u_1..u_n via x_k = p_k(u) / k."""
    out = ExactPoly.zero(n)
    for e, c in p.terms.items():
        term = ExactPoly.constant(n, c)
        for k, a in enumerate(e, start=1):
            if a:
                term = term * _x_power_u(k, a, n)
        out = out + term
    return out


def _solve_linear_in(poly: ExactPoly, index: int) -> tuple[Fraction, ExactPoly]:
    """Split poly = c * x_index + rest with rest free of x_index."""
    c = Fraction(0)
    rest = {}
    for e, v in poly.terms.items():
        k = e[index]
        if k == 0:
            rest[e] = v
        elif k == 1 and not any(e[:index]) and not any(e[index + 1:]):
            c += v
        else:
            raise ArithmeticError(f"x{index + 1} does not appear linearly")
    if not c:
        raise ArithmeticError(f"x{index + 1} does not appear")
    return c, ExactPoly(poly.num_vars, rest)


@lru_cache(maxsize=None)
def _eliminated(n: int, j: int) -> ExactPoly:
    """x_j (j >= n) as a polynomial in x_1..x_{n-1}."""
    if j < n:
        return ExactPoly.var(n - 1, j - 1)
    q = j - n + 1
    # K_(q,1,...,1) with n-1 ones equals sum_i u_i^(q-1) once u_1...u_n = 1:
    # K_(1^n) = 1 and K_(q,1^(n-1)) = K_{q-1} for q >= 2
    lhs = power_to_x(class_to_power((q,) + (1,) * (n - 1)), j)
    rhs = ExactPoly.constant(j) if q == 1 else ExactPoly.var(j, q - 2) * (q - 1)
    c, rest = _solve_linear_in(lhs - rhs, j - 1)
    solved = rest / (-c)
    reps = {i - 1: _eliminated(n, i) for i in range(n, j)}
    return poly_substitute_many(solved.embed(j - 1), reps, n - 1)


def eliminate_x(n: int, j_max: int) -> dict[int, ExactPoly]:
    """x_n .. x_{j_max} expressed in x_1..x_{n-1} under u_1 ... u_n = 1.

    Keys are 1-based variable indices.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if j_max < n:
        raise ValueError(f"j_max must be at least n = {n}, got {j_max}")
    return {j: _eliminated(n, j) for j in range(n, j_max + 1)}


def degenerate(p: ExactPoly, n: int) -> ExactPoly:
    """Rewrite a polynomial in x_1..x_k into x_1..x_{n-1} by elimination."""
    if p.num_vars <= n - 1:
        return p.embed(n - 1)
    reps = {j - 1: _eliminated(n, j) for j in range(n, p.num_vars + 1)}
    return poly_substitute_many(p, reps, n - 1)


class SchurTable:
    """Memoized S_0, S_1, ... in x_1..x_{n-1} for fixed n.

    ``mode`` is "degenerated" (S_M for M >= n from the recursion) or
    "generic" (no constraint; entries keep all their variables, embedded in
    ``width`` variables).
    """

    def __init__(self, n: int, mode: str = "degenerated", width: int | None = None):
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        if mode not in ("degenerated", "generic"):
            raise ValueError(f"unknown mode {mode!r}")
        self.rank_n = n
        self.mode = mode
        self.num_vars = n - 1 if mode == "degenerated" else (width or n - 1)
        self.entries: dict[int, ExactPoly] = {}
        self._star: dict[int, ExactPoly] = {}

    def __getitem__(self, m: int) -> ExactPoly:
        if m < 0:
            return ExactPoly.zero(self.num_vars)
        if m not in self.entries:
            self.entries[m] = self._compute(m)
        return self.entries[m]

    def star(self, k: int) -> ExactPoly:
        if k not in self._star:
            self._star[k] = poly_sign_flip(self[k])
        return self._star[k]

    def _compute(self, m: int) -> ExactPoly:
        n = self.rank_n
        if self.mode == "generic" or m < n:
            g = generic_schur(m)
            if g.num_vars > self.num_vars:
                raise ValueError(f"S_{m} needs {m} variables, table has {self.num_vars}")
            return g.embed(self.num_vars)
        # h_M = -sum_{k=1}^{N-1} (-1)^k e_k h_{M-k} - (-1)^N e_N h_{M-N}, e_N = 1,
        # with (-1)^k e_k = S_k^*
        for lower in range(n, m):
            self[lower]
        total = ExactPoly.zero(self.num_vars)
        for k in range(1, n):
            total = total - self.star(k) * self[m - k]
        sign = -1 if n % 2 == 0 else 1
        return total + self[m - n] * sign


@lru_cache(maxsize=None)
def _table(n: int) -> SchurTable:
    return SchurTable(n)


def degenerated_schur(n: int, m: int) -> ExactPoly:
    """S_m in x_1..x_{n-1}; generic for m < n, degenerated for m >= n."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")
    return _table(n)[m]


def printed_recursion_schur(n: int, m: int) -> ExactPoly:
    """One step of the recursion in the form
    S_M = (-1)^N S_{M-N-1} - sum_{k=1}^{N} S_k^* S_{M-k},
    with every right-hand S taken from the validated table.

    Only used to report how that form compares with :func:`degenerated_schur`.
    """
    if m < n:
        raise ValueError(f"the recursion applies for m >= n, got m={m}, n={n}")
    t = _table(n)
    total = t[m - n - 1] * (1 if n % 2 == 0 else -1)
    for k in range(1, n + 1):
        total = total - t.star(k) * t[m - k]
    return total


def schur_of_partition(n: int, q: Sequence[int], mode: str = "degenerated") -> ExactPoly:
    """S_(q) as det[S_{q_i - i + j}] over the nonzero parts of q.

    With ``mode="generic"`` the entries are unconstrained S_k(x_1..x_k) and
    the result lives in as many variables as the largest index used.
    """
    q = tuple(q)
    if len(q) > n:
        raise ValueError(f"partition {q} has more than {n} parts")
    parts = tuple(v for v in q if v)
    s = len(parts)
    if mode == "degenerated":
        table = _table(n)
    else:
        width = max((parts[i] - i + s - 1 for i in range(s)), default=0)
        table = SchurTable(n, "generic", width=max(width, 1))
    if s == 0:
        return ExactPoly.constant(table.num_vars)
    if s == 1:
        return table[parts[0]]
    matrix = [[table[parts[i] - i + j] for j in range(s)] for i in range(s)]
    return poly_det(matrix, table.num_vars)


def elementary_in_x(m: int) -> ExactPoly:
    """e_m in x_1..x_m: (-1)^m S_m(-x)."""
    s = poly_sign_flip(generic_schur(m))
    return -s if m % 2 else s
