import random
from fractions import Fraction

import mpmath
import pytest
import sympy

from nonproper.families import fixture
from nonproper.polyring import GaussRat, Poly, PolyMap
from nonproper.solver import (PositiveDimensional, bernstein_deficiency, bernstein_identity,
                              count_all_solutions, count_torus_solutions, fiber_is_empty,
                              fiber_is_empty_numeric, resultant, solve_system, univariate_roots)

from oracles import U, V, fiber_empty_oracle, poly_expr, to_sym, torus_count_oracle

u, v = Poly.u(), Poly.v()


def g(*cs):
    return [GaussRat(c) for c in cs]


def test_roots_with_multiplicity():
    roots = univariate_roots(g(-2, 5, -4, 1))  # (t-1)^2 (t-2)
    assert [(r.exact, r.multiplicity) for r in roots] == [(GaussRat(1), 2), (GaussRat(2), 1)]
    assert all(r.certified for r in roots)


def test_roots_of_universality_polynomial():
    # s (P(s) - 2 y1) + y2 - 1 with P = 1 - s^2 and y = (0, 0)
    roots = univariate_roots(g(-1, 1, 0, -1))
    assert len(roots) == 3 and all(r.multiplicity == 1 for r in roots)
    with mpmath.workprec(128):
        for r in roots:
            assert abs(r.value - r.value ** 3 - 1) < mpmath.mpf(10) ** -28


def test_roots_of_constant():
    assert univariate_roots(g(5)) == []


def test_roots_reconstruct_polynomial():
    rng = random.Random(3)
    for _ in range(20):
        coeffs = g(*[rng.randint(-5, 5) for _ in range(6)])
        coeffs[-1] = GaussRat(rng.choice((1, 2, -3)))
        roots = univariate_roots(coeffs)
        assert sum(r.multiplicity for r in roots) == 5
        with mpmath.workprec(128):
            x = mpmath.mpf("0.37")
            prod = coeffs[-1].to_mpc()
            for r in roots:
                prod *= (x - r.value) ** r.multiplicity
            direct = sum(c.to_mpc() * x ** k for k, c in enumerate(coeffs))
            assert abs(prod - direct) < mpmath.mpf(10) ** -20


def _sylvester_in_v(p, q):
    a = sympy.Poly(poly_expr(p), V).all_coeffs()
    b = sympy.Poly(poly_expr(q), V).all_coeffs()
    m, n = len(a) - 1, len(b) - 1
    rows = [[0] * k + a + [0] * (n - 1 - k) for k in range(n)]
    rows += [[0] * k + b + [0] * (m - 1 - k) for k in range(m)]
    return sympy.Matrix(rows).det()


def test_resultant_small():
    r = resultant(u * v - 1, v - 2, eliminate=1)
    assert sympy.expand(to_sym(r[0]) + to_sym(r[1]) * U - _sylvester_in_v(u * v - 1, v - 2)) == 0
    # proportional to 2u - 1
    assert r[1] == -2 * r[0]


def test_resultant_constant_in_eliminated_variable():
    p = v * v + 1
    q = u * u * v + u + 3
    r = resultant(p, q, eliminate=0)
    assert Poly.from_univariate(r, var=1) == p ** 2


def test_resultant_fixture_empty_fiber():
    f = fixture("1.4")
    assert fiber_is_empty(f.f1 - 1, f.f2 - 1)
    assert count_all_solutions(f.f1 - 1, f.f2 - 1) == 0


def test_solve_system_small():
    sols = solve_system(u * v - 1, v - 2)
    assert sols.count_all == 1 and sols.count_torus == 1
    (pt, mult), = sols.solutions
    assert pt == (GaussRat(Fraction(1, 2)), GaussRat(2)) and mult == 1


def test_counts_example_pair():
    rng = random.Random(5)
    for _ in range(5):
        a0, a1, a2, b0, b1, b2 = (rng.randint(1, 9) * rng.choice((1, -1)) for _ in range(6))
        p = a0 + a1 * u * v + a2 * u * v ** 2
        q = b0 + b1 * u + b2 * u * v
        assert count_torus_solutions(p, q) == torus_count_oracle(p, q) == 2


def test_forced_face_root_loses_solutions():
    # both restrictions to the face with normal (-1,0) vanish at v = -1
    p = 1 + u * v + u * v ** 2
    q = 1 + u + u * v
    assert count_torus_solutions(p, q) == torus_count_oracle(p, q) < 2


def test_trivial_count():
    assert count_torus_solutions(u - 1, v - 1) == 1


def test_positive_dimensional_flagged():
    with pytest.raises(PositiveDimensional):
        count_all_solutions(u * v - 1, 2 * u * v - 2)
    assert solve_system(u * v - 1, 2 * u * v - 2).positive_dimensional


def test_deficiency_at_missing_point():
    f = fixture("1.4")
    torus, defect, vol = bernstein_identity(f.f1 - 1, f.f2 - 1)
    assert torus == 0 and defect == vol == 2


def test_deficiency_generic_point():
    f = fixture("1.4")
    assert all(m == 0 for _, m in bernstein_deficiency(f, (GaussRat(3), GaussRat(7))))


def test_deficiency_identity_map():
    assert [g for g, m in bernstein_deficiency(PolyMap(u, v), (GaussRat(2), GaussRat(5))) if m] == []


def test_counts_against_groebner_oracle():
    rng = random.Random(11)
    checked = 0
    while checked < 15:
        p = Poly({(rng.randint(0, 3), rng.randint(0, 3)): GaussRat(rng.randint(-3, 3)) for _ in range(3)})
        q = Poly({(rng.randint(0, 3), rng.randint(0, 3)): GaussRat(rng.randint(-3, 3)) for _ in range(3)})
        try:
            got = count_torus_solutions(p, q)
        except PositiveDimensional:
            continue
        assert got == torus_count_oracle(p, q), (p, q)
        checked += 1


def test_numeric_and_exact_emptiness_agree():
    f = fixture("1.2")
    for y in ((0, 1), (Fraction(1, 2), 1), (3, 3), (Fraction(1, 3), 1)):
        yy = (GaussRat(y[0]), GaussRat(y[1]))
        exact = fiber_is_empty(f.f1 - yy[0], f.f2 - yy[1])
        assert exact == fiber_empty_oracle(f.f1, f.f2, yy)
        assert fiber_is_empty_numeric(f.f1, f.f2, (yy[0].to_mpc(), yy[1].to_mpc())) == exact
