"""Schur functions and class functions, checked against sympy expansions in
concrete u variables."""

from fractions import Fraction as F
from itertools import combinations, combinations_with_replacement, permutations

import pytest
import sympy as sp

from weylchar.polyring import ExactPoly, poly_substitute_many
from weylchar.symfunc import (
    PowerSumExpr,
    class_to_power,
    degenerate,
    degenerated_schur,
    eliminate_x,
    generic_schur,
    power_to_u,
    power_to_x,
    printed_recursion_schur,
    schur_of_partition,
    x_to_u,
)
from weylchar.weights import partitions_of


def P(n, terms):
    """Polynomial from {exponents: coeff} in n variables."""
    return ExactPoly(n, {tuple(e): F(c) for e, c in terms.items()})


def to_sympy(p: ExactPoly, syms):
    return sp.Add(*[
        sp.Rational(c.numerator, c.denominator) * sp.Mul(*[s**a for s, a in zip(syms, e)])
        for e, c in p.terms.items()
    ])


def from_sympy(expr, syms) -> ExactPoly:
    poly = sp.Poly(sp.expand(expr), *syms)
    return ExactPoly(len(syms), {
        tuple(e): F(int(c.p), int(c.q)) for e, c in zip(poly.monoms(), poly.coeffs())
    })


def monomial_symmetric(q, n):
    """sum of u^w over distinct arrangements of q padded to n entries."""
    q = tuple(q) + (0,) * (n - len(q))
    return ExactPoly(n, {w: 1 for w in set(permutations(q))})


S5 = P(5, {
    (5, 0, 0, 0, 0): F(1, 120), (3, 1, 0, 0, 0): F(1, 6), (1, 2, 0, 0, 0): F(1, 2),
    (2, 0, 1, 0, 0): F(1, 2), (0, 1, 1, 0, 0): 1, (1, 0, 0, 1, 0): 1, (0, 0, 0, 0, 1): 1,
})
X5 = P(4, {
    (0, 0, 0, 0): 1, (5, 0, 0, 0): F(-1, 120), (3, 1, 0, 0): F(1, 6), (1, 2, 0, 0): F(-1, 2),
    (2, 0, 1, 0): F(-1, 2), (0, 1, 1, 0): 1, (1, 0, 0, 1): 1,
})
S5_DEG = P(4, {(0, 0, 0, 0): 1, (3, 1, 0, 0): F(1, 3), (0, 1, 1, 0): 2, (1, 0, 0, 1): 2})
S6_DEG = P(4, {
    (1, 0, 0, 0): 2, (6, 0, 0, 0): F(-1, 72), (4, 1, 0, 0): F(1, 3), (2, 2, 0, 0): F(-1, 2),
    (3, 0, 1, 0): F(-2, 3), (1, 1, 1, 0): 2, (0, 0, 2, 0): 1, (2, 0, 0, 1): 2, (0, 1, 0, 1): 2,
})


class TestGenericSchur:
    def test_degree_five(self):
        assert generic_schur(5) == S5

    def test_degree_zero(self):
        assert generic_schur(0) == ExactPoly.constant(0)

    @pytest.mark.parametrize("m", range(1, 8))
    def test_matches_exponential_series(self, m):
        z = sp.Symbol("z")
        xs = sp.symbols(f"x1:{m + 1}")
        series = sp.series(sp.exp(sum(x * z**(i + 1) for i, x in enumerate(xs))), z, 0, m + 1)
        coeff = sp.expand(series.removeO()).coeff(z, m)
        assert generic_schur(m) == from_sympy(coeff, xs)

    def test_degree_two(self):
        assert generic_schur(2) == P(2, {(2, 0): F(1, 2), (0, 1): 1})

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            generic_schur(-1)

    @pytest.mark.parametrize("m", range(0, 9))
    def test_weighted_homogeneous(self, m):
        s = generic_schur(m)
        assert s.weighted_degrees(range(1, m + 1)) <= {m}


class TestClassToPower:
    def test_two_distinct_parts(self):
        assert class_to_power((5, 2)) == PowerSumExpr({(5, 2): 1, (7,): -1})

    def test_two_equal_parts(self):
        assert class_to_power((3, 3)) == PowerSumExpr({(3, 3): F(1, 2), (6,): F(-1, 2)})

    def test_two_one_one(self):
        # 1/2 (K1^2 K2 - 2 K1 K3 - K2^2 + 2 K4)
        expected = PowerSumExpr({(2, 1, 1): F(1, 2), (3, 1): -1, (2, 2): F(-1, 2), (4,): 1})
        assert class_to_power((2, 1, 1)) == expected
        assert power_to_u(expected, 4) == monomial_symmetric((2, 1, 1), 4)

    @pytest.mark.parametrize("q", [q for m in range(1, 7) for q in partitions_of(m, m)])
    def test_matches_monomial_symmetric(self, q):
        parts = tuple(v for v in q if v)
        w = sum(parts)
        for n in (w, w + 1):
            assert power_to_u(class_to_power(parts), n) == monomial_symmetric(parts, n)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            class_to_power((2, 0))
        with pytest.raises(ValueError):
            class_to_power(())


class TestPowerToX:
    def test_single_generator(self):
        assert power_to_x(PowerSumExpr({(1,): 1})) == P(1, {(1,): 1})

    def test_reduction_rule(self):
        got = power_to_x(PowerSumExpr({(2, 1): 1, (3,): -1}))
        assert got == P(3, {(1, 1, 0): 2, (0, 0, 1): -3})

    @pytest.mark.parametrize("m", range(1, 9))
    def test_class_functions_sum_to_schur(self, m):
        total = ExactPoly.zero(m)
        for q in partitions_of(m, m):
            parts = tuple(v for v in q if v)
            total = total + power_to_x(class_to_power(parts), m)
        assert total == generic_schur(m)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_sum_with_at_most_n_parts_in_u(self, n):
        # with at most n parts the identity holds after restricting to n variables
        for m in range(0, 7):
            total = ExactPoly.zero(n)
            for q in partitions_of(m, n):
                parts = tuple(v for v in q if v)
                if parts:
                    total = total + x_to_u(power_to_x(class_to_power(parts), m), n)
                else:
                    total = total + ExactPoly.constant(n)
            h = ExactPoly(n, {e: 1 for q in partitions_of(m, n) for e in set(permutations(q))})
            assert total == h
            assert x_to_u(generic_schur(m), n) == h


def _u_constraint_subs(n):
    us = sp.symbols(f"u1:{n + 1}")
    last = 1 / sp.Mul(*us[:-1])
    return us, {us[-1]: last}


class TestElimination:
    def test_x5_for_a4(self):
        assert eliminate_x(5, 5)[5] == X5

    def test_x2_for_a1(self):
        x2 = eliminate_x(2, 2)[2]
        assert x2 == P(1, {(2,): F(1, 2), (0,): -1})
        # brute force: u2 = 1/u1, x1 = u1 + u2, x2 = (u1^2 + u2^2)/2
        u = sp.Symbol("u")
        x1 = u + 1 / u
        assert sp.simplify(to_sympy(x2, [sp.Symbol("y")]).subs(sp.Symbol("y"), x1) - (u**2 + u**-2) / 2) == 0

    @pytest.mark.parametrize("n", range(2, 5))
    def test_eliminated_values_hold_in_u(self, n):
        us, subs = _u_constraint_subs(n)
        for j, poly in eliminate_x(n, n + 3).items():
            xk = [sum(u**k for u in us) / k for k in range(1, n)]
            lhs = to_sympy(poly, sp.symbols(f"y1:{n}")).subs(dict(zip(sp.symbols(f"y1:{n}"), xk)))
            rhs = sum(u**j for u in us) / j
            assert sp.simplify((lhs - rhs).subs(subs)) == 0

    def test_bounds(self):
        with pytest.raises(ValueError):
            eliminate_x(1, 3)
        with pytest.raises(ValueError):
            eliminate_x(4, 3)

    def test_substitution_gives_degenerated_s5(self):
        x5 = eliminate_x(5, 5)[5]
        got = poly_substitute_many(generic_schur(5), {4: x5}, 4)
        assert got == S5_DEG


class TestDegeneratedSchur:
    def test_reference_fixtures(self):
        assert degenerated_schur(5, 5) == S5_DEG
        assert degenerated_schur(5, 6) == S6_DEG

    def test_a1_degree_two(self):
        assert degenerated_schur(2, 2) == P(1, {(2,): 1, (0,): -1})

    def test_below_rank_is_generic(self):
        assert degenerated_schur(5, 3) == generic_schur(3).embed(4)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_recursion_matches_elimination(self, n):
        for m in range(n, 11):
            assert degenerated_schur(n, m) == degenerate(generic_schur(m), n)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_weighted_degrees_congruent(self, n):
        for m in range(0, 11):
            degs = degenerated_schur(n, m).weighted_degrees(range(1, n))
            assert all((d - m) % n == 0 for d in degs)

    @pytest.mark.parametrize("n", range(2, 5))
    def test_equals_h_under_constraint(self, n):
        us, subs = _u_constraint_subs(n)
        ys = sp.symbols(f"y1:{n}")
        xk = {y: sum(u**k for u in us) / k for k, y in enumerate(ys, start=1)}
        for m in range(n, n + 3):
            h = sum(sp.Mul(*c) for c in combinations_with_replacement(us, m))
            got = to_sympy(degenerated_schur(n, m), ys).subs(xk)
            assert sp.simplify((got - h).subs(subs)) == 0

    def test_printed_form_differs(self):
        assert printed_recursion_schur(5, 5) != degenerated_schur(5, 5)
        assert printed_recursion_schur(5, 6) != degenerated_schur(5, 6)

    def test_bounds(self):
        with pytest.raises(ValueError):
            degenerated_schur(1, 3)
        with pytest.raises(ValueError):
            degenerated_schur(3, -2)


class TestSchurOfPartition:
    def test_single_row(self):
        assert schur_of_partition(5, (6, 0, 0, 0, 0)) == degenerated_schur(5, 6)

    def test_column_of_two(self):
        expected = P(2, {(2, 0): F(1, 2), (0, 1): -1})
        for n in (3, 4, 5):
            assert schur_of_partition(n, (1, 1)) == expected.embed(n - 1)

    def test_five_one(self):
        s = degenerated_schur
        assert schur_of_partition(5, (5, 1, 0, 0, 0)) == s(5, 5) * s(5, 1) - s(5, 6)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_generic_column_is_elementary(self, m):
        got = schur_of_partition(m + 1, (1,) * m, mode="generic")
        n = m
        e = ExactPoly(n, {tuple(1 if i in c else 0 for i in range(n)): 1 for c in combinations(range(n), m)})
        assert x_to_u(got, n) == e

    @pytest.mark.parametrize("m", range(0, 7))
    def test_generic_row_is_generic_schur(self, m):
        q = (m,) if m else ()
        got = schur_of_partition(3, q, mode="generic")
        assert got == generic_schur(m).embed(got.num_vars)

    def test_too_many_parts(self):
        with pytest.raises(ValueError):
            schur_of_partition(2, (1, 1, 1))
