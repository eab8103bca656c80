"""Exact solution of over-determined rational linear systems.

Rows are scaled to integers and reduced by fraction-free (Bareiss)
elimination with a deterministic pivot rule: the first row, in the given
order, with a nonzero entry in the pivot column.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularSystem(ArithmeticError):
    """The system has no solution or more than one."""


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    d = 1
    for v in row:
        d = lcm(d, Fraction(v).denominator)
    return [int(Fraction(v) * d) for v in row]


def solve_exact(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Unique solution of a x = b, where *a* may have more rows than columns.

    Raises :class:`SingularSystem` if the columns of *a* are dependent or the
    extra equations are inconsistent.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if len(b) != rows:
        raise ValueError("right-hand side length does not match the matrix")
    m = [_integer_row(list(a[i]) + [b[i]]) for i in range(rows)]
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            raise SingularSystem(f"column {c} has no pivot; solution is not unique")
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for k in range(c, cols + 1):
                # Bareiss step: division is exact
                row_i[k] = (p * row_i[k] - f * row_r[k]) // prev
        prev = p
        r += 1
    for i in range(r, rows):
        if m[i][cols]:
            raise SingularSystem("inconsistent equations")
    x = [Fraction(0)] * cols
    for i in range(cols - 1, -1, -1):
        s = Fraction(m[i][cols])
        for k in range(i + 1, cols):
            s -= m[i][k] * x[k]
        x[i] = s / m[i][i]
    return x
