"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples (all of length ``num_vars``) to
nonzero :class:`fractions.Fraction` coefficients.  Zero terms are pruned on
construction, so two polynomials are equal exactly when their term maps are.
Mixing polynomials with different variable counts raises ``ValueError``;
use :meth:`ExactPoly.embed` to move to more variables explicitly.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]

__all__ = [
    "ExactPoly",
    "poly_add",
    "poly_mul",
    "poly_substitute",
    "poly_sign_flip",
    "poly_coeff",
    "poly_eval",
    "poly_det",
    "poly_divide_exact",
    "InexactDivision",
]


class InexactDivision(ArithmeticError):
    """Raised when a division expected to be exact leaves a remainder."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class ExactPoly:
    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponents, object] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        clean: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent tuple {exps} does not have {num_vars} entries")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _frac(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.num_vars = num_vars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars: int, terms: dict[Exponents, Fraction]) -> "ExactPoly":
        # trusted constructor: terms already pruned and well-formed
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, num_vars: int, c=1) -> "ExactPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def zero(cls, num_vars: int) -> "ExactPoly":
        return cls._raw(num_vars, {})

    @classmethod
    def var(cls, num_vars: int, index: int, power: int = 1) -> "ExactPoly":
        """The monomial x_{index}^power, with *index* 0-based."""
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        e = [0] * num_vars
        e[index] = power
        return cls._raw(num_vars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "ExactPoly":
        return cls(len(exps), {tuple(exps): c})

    def _check(self, other: "ExactPoly"):
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def _coerce(self, other) -> "ExactPoly":
        if isinstance(other, ExactPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.constant(self.num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ExactPoly._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly._raw(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ExactPoly.zero(self.num_vars)
            return ExactPoly._raw(self.num_vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ExactPoly._raw(self.num_vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = ExactPoly.constant(self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPoly.constant(self.num_vars, other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"ExactPoly({self.num_vars}, {self.format()!r})"

    def __str__(self):
        return self.format()

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def coeff(self, exps: Sequence[int]) -> Fraction:
        exps = tuple(exps)
        if len(exps) != self.num_vars:
            raise ValueError(f"exponent tuple {exps} does not have {self.num_vars} entries")
        return self.terms.get(exps, Fraction(0))

    def uses(self, index: int) -> bool:
        return any(e[index] for e in self.terms)

    def max_var(self) -> int:
        """Number of leading variables actually used (0 for a constant)."""
        used = 0
        for e in self.terms:
            for i in range(len(e) - 1, -1, -1):
                if e[i]:
                    used = max(used, i + 1)
                    break
        return used

    def embed(self, num_vars: int) -> "ExactPoly":
        """Same polynomial viewed in *num_vars* variables.

        Growing appends unused variables; shrinking requires the dropped
        variables to be absent.
        """
        if num_vars == self.num_vars:
            return self
        if num_vars > self.num_vars:
            pad = (0,) * (num_vars - self.num_vars)
            return ExactPoly._raw(num_vars, {e + pad: c for e, c in self.terms.items()})
        if self.max_var() > num_vars:
            raise ValueError(f"cannot drop variables still in use (uses {self.max_var()})")
        return ExactPoly._raw(num_vars, {e[:num_vars]: c for e, c in self.terms.items()})

    def map_terms(self, fn) -> "ExactPoly":
        """Apply ``fn(exps, coeff) -> (exps, coeff)`` to every term, merging collisions."""
        out: dict[Exponents, Fraction] = {}
        n = None
        for e, c in self.terms.items():
            e2, c2 = fn(e, c)
            n = len(e2)
            out[e2] = out.get(e2, 0) + c2
        if n is None:
            n = self.num_vars
        return ExactPoly._raw(n, {e: c for e, c in out.items() if c})

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * a for w, a in zip(weights, e)) for e in self.terms}

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex order: higher total degree first, then x1 first."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    def format(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"{var}{j + 1}" if a == 1 else f"{var}{j + 1}^{a}"
                for j, a in enumerate(e)
                if a
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def poly_add(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    a._check(b)
    return a + b


def poly_mul(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    a._check(b)
    return a * b


def _addmul(out: dict, mono: Exponents, c: Fraction, poly: ExactPoly) -> None:
    # out += c * x^mono * poly, in place
    for e, pc in poly.terms.items():
        t = tuple(a + b for a, b in zip(mono, e))
        v = out.get(t, 0) + c * pc
        if v:
            out[t] = v
        else:
            out.pop(t, None)


def poly_substitute(p: ExactPoly, var_index: int, replacement: ExactPoly) -> ExactPoly:
    """Replace variable *var_index* (0-based) by *replacement* and expand."""
    if not 0 <= var_index < p.num_vars:
        raise ValueError(f"variable index {var_index} out of range for {p.num_vars} variables")
    p._check(replacement)
    return poly_substitute_many(p, {var_index: replacement}, p.num_vars)


def poly_substitute_many(
    p: ExactPoly, replacements: Mapping[int, ExactPoly], num_vars: int
) -> ExactPoly:
    """Simultaneously replace several variables of *p*.

    Every replacement lives in *num_vars* variables, and every variable of
    *p* with index >= *num_vars* must be replaced.  The result has
    *num_vars* variables.
    """
    for i in range(num_vars, p.num_vars):
        if i not in replacements and p.uses(i):
            raise ValueError(f"variable {i} is neither kept nor replaced")
    for r in replacements.values():
        if r.num_vars != num_vars:
            raise ValueError(f"replacement has {r.num_vars} variables, expected {num_vars}")
    powers: dict[tuple[int, int], ExactPoly] = {}
    out: dict[Exponents, Fraction] = {}
    for e, c in p.terms.items():
        low = tuple(0 if i in replacements else e[i] for i in range(num_vars))
        term = None
        for i, k in enumerate(e):
            if k and i in replacements:
                key = (i, k)
                if key not in powers:
                    powers[key] = replacements[i] ** k
                term = powers[key] if term is None else term * powers[key]
        if term is None:
            v = out.get(low, 0) + c
            if v:
                out[low] = v
            else:
                out.pop(low, None)
        else:
            _addmul(out, low, c, term)
    return ExactPoly._raw(num_vars, out)


def poly_sign_flip(p: ExactPoly) -> ExactPoly:
    """Replace every x_i by -x_i."""
    return ExactPoly._raw(
        p.num_vars, {e: (-c if sum(e) % 2 else c) for e, c in p.terms.items()}
    )


def poly_coeff(p: ExactPoly, exponents: Sequence[int]) -> Fraction:
    return p.coeff(exponents)


def poly_eval(p: ExactPoly, point: Sequence) -> Fraction:
    if len(point) != p.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, expected {p.num_vars}")
    pt = [_frac(v) for v in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        t = c
        for v, a in zip(pt, e):
            if a:
                t *= v ** a
        total += t
    return total


def poly_det(matrix: Sequence[Sequence[ExactPoly]], num_vars: int) -> ExactPoly:
    """Determinant of a square matrix of polynomials.

    Laplace expansion along rows with memoization on the set of used
    columns; O(s 2^s) polynomial products.
    """
    s = len(matrix)
    if any(len(row) != s for row in matrix):
        raise ValueError("matrix is not square")
    if s == 0:
        return ExactPoly.constant(num_vars)
    memo: dict[int, ExactPoly] = {}

    def minor(row: int, used: int) -> ExactPoly:
        if row == s:
            return ExactPoly.constant(num_vars)
        if used in memo:
            return memo[used]
        total = ExactPoly.zero(num_vars)
        sign = 1
        for j in range(s):
            if used >> j & 1:
                continue
            entry = matrix[row][j]
            if entry:
                sub = minor(row + 1, used | (1 << j))
                if sub:
                    total = total + entry * sub if sign > 0 else total - entry * sub
            sign = -sign
        memo[used] = total
        return total

    return minor(0, 0)


def _glex(e: Exponents) -> tuple:
    return (sum(e), e)


def _leading(p: ExactPoly) -> Exponents:
    return max(p.terms, key=_glex)


def poly_divide_exact(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Quotient a / b, raising :class:`InexactDivision` on a nonzero remainder.

    Multivariate division against the graded-lex leading term of *b*.
    """
    a._check(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lead = _leading(b)
    lead_c = b.terms[lead]
    tail = [(e, c) for e, c in b.terms.items() if e != lead]
    rem = dict(a.terms)
    # max-heap of remainder monomials; stale entries are skipped
    heap = [(-sum(e), tuple(-x for x in e), e) for e in rem]
    heapq.heapify(heap)
    quot: dict[Exponents, Fraction] = {}
    leftover = 0
    while heap:
        *_, top = heapq.heappop(heap)
        c = rem.pop(top, None)
        if c is None:
            continue
        shift = tuple(x - y for x, y in zip(top, lead))
        if any(d < 0 for d in shift):
            leftover += 1
            continue
        q = c / lead_c
        quot[shift] = q
        for e, bc in tail:
            t = tuple(x + y for x, y in zip(e, shift))
            old = rem.get(t)
            v = (old or 0) - q * bc
            if v:
                rem[t] = v
                if old is None:
                    heapq.heappush(heap, (-sum(t), tuple(-x for x in t), t))
            elif old is not None:
                del rem[t]
    if leftover:
        raise InexactDivision(f"nonzero remainder with {leftover} terms")
    return ExactPoly(a.num_vars, quot)


def from_terms(num_vars: int, items: Iterable[tuple[Sequence[int], object]]) -> ExactPoly:
    """Build a polynomial from (exponents, coefficient) pairs, summing repeats."""
    out: dict[Exponents, Fraction] = {}
    for e, c in items:
        e = tuple(e)
        out[e] = out.get(e, 0) + _frac(c)
    return ExactPoly(num_vars, out)


def poly_compose(p: ExactPoly, images: Sequence[ExactPoly], num_vars: int) -> ExactPoly:
    """Substitute variable i of *p* by ``images[i]`` (all in *num_vars* variables)."""
    if len(images) != p.num_vars:
        raise ValueError(f"need {p.num_vars} images, got {len(images)}")
    for im in images:
        if im.num_vars != num_vars:
            raise ValueError(f"image has {im.num_vars} variables, expected {num_vars}")
    powers: dict[tuple[int, int], ExactPoly] = {}
    origin = (0,) * num_vars
    out: dict[Exponents, Fraction] = {}
    for e, c in p.terms.items():
        term = ExactPoly.constant(num_vars)
        for i, k in enumerate(e):
            if k:
                if (i, k) not in powers:
                    powers[i, k] = images[i] ** k
                term = term * powers[i, k]
        _addmul(out, origin, c, term)
    return ExactPoly._raw(num_vars, out)
