import random
from fractions import Fraction

import pytest
import sympy

from nonproper.analysis import (genericity_check, implicitize, is_dominant, jelonek_set,
                                kf_points, normalize, topological_degree)
from nonproper.families import fixture, make_lemma23, make_thm14
from nonproper.lattice import mixed_volume
from nonproper.polyring import GaussRat, Poly, PolyMap, support_pair
from nonproper.solver import PositiveDimensional, count_all_solutions

from oracles import S, T, count_all_oracle, poly_expr

u, v = Poly.u(), Poly.v()
q = GaussRat


def example_map(a1, a2, b1, b2, a0=3, b0=-2):
    return PolyMap(a0 + a1 * u * v + a2 * u * v ** 2, b0 + b1 * u + b2 * u * v)


def implicit_sym(comp):
    return poly_expr(comp.implicit, S, T)


def test_dominance():
    assert is_dominant(fixture("1.4"))
    assert not is_dominant(PolyMap(u, u ** 2))
    assert is_dominant(PolyMap(u, v))


def test_topological_degree():
    assert topological_degree(fixture("1.2"))[0] == 3
    assert topological_degree(make_thm14(2, [1, 3], [2, 5]))[0] == 2
    assert topological_degree(PolyMap(u, v))[0] == 1
    f = fixture("1.2")
    y = (q(Fraction(7, 3)), q(-5))
    assert count_all_oracle(f.f1, f.f2, y) == 3


def test_genericity_example_pair():
    rng = random.Random(1)
    for _ in range(3):
        a1, a2, b1, b2 = (rng.randint(1, 9) * rng.choice((1, -1)) for _ in range(4))
        if a1 * b2 == b1 * a2:
            continue
        assert genericity_check(example_map(a1, a2, b1, b2)).verdict == "generically_nonproper"
    assert genericity_check(example_map(2, 4, 1, 2)).verdict == "degenerate"


def test_genericity_identity():
    v_ = genericity_check(PolyMap(u, v))
    assert v_.verdict == "proper_candidate" and not v_.nonproper


def test_genericity_non_dominant():
    v_ = genericity_check(PolyMap(u, u ** 2))
    assert not v_.dominant and v_.verdict == "degenerate"


def test_jelonek_fixture_14():
    comps = jelonek_set(fixture("1.4"))
    exprs = {sympy.expand(implicit_sym(c)) for c in comps}
    assert exprs == {S - T, S - 1}


def test_jelonek_fixture_13_is_cubic_through_cusp():
    comps = jelonek_set(fixture("1.3"))
    assert [c.kind for c in comps] == ["rational_curve"]
    expr = implicit_sym(comps[0])
    assert sympy.Poly(expr, S, T).total_degree() == 3
    assert expr.subs({S: 0, T: 1}) == 0
    assert sympy.Poly(expr, S, T).is_irreducible


def test_jelonek_fixture_12():
    comps = jelonek_set(fixture("1.2"))
    kinds = sorted(c.kind for c in comps)
    assert kinds == ["horizontal_line", "rational_curve"]
    curve = next(c for c in comps if c.kind == "rational_curve")
    line = next(c for c in comps if c.kind == "horizontal_line")
    assert sympy.expand(implicit_sym(curve) - (1 - 2 * T + T ** 2 - S ** 2 + S ** 3)) == 0
    assert line.parametrization == 1


def test_implicitization_matches_sympy():
    g1 = [q(0), q(1), q(-1)]       # s - s^2
    g2 = [q(2), q(0), q(0), q(1)]  # 2 + s^3
    x = sympy.Symbol("x")
    ref = sympy.resultant(x - x ** 2 - S, 2 + x ** 3 - T, x)
    got = poly_expr(implicitize(g1, g2), S, T)
    assert sympy.simplify(got / ref).is_number


def _points_on(comp, rng, n):
    pts = []
    for _ in range(n):
        x = q(Fraction(rng.randint(-30, 30), rng.randint(1, 5)))
        pts.append(comp.point_at(x))
    return pts


@pytest.mark.parametrize("f", [fixture("1.2"), fixture("1.3"), fixture("1.4"), make_lemma23(2, [1, 1, 1])],
                         ids=["1.2", "1.3", "1.4", "lemma23"])
def test_points_on_and_off_jelonek_set(f):
    rng = random.Random(8)
    mu = topological_degree(f)[0]
    comps = jelonek_set(f)
    for comp in comps:
        for y in _points_on(comp, rng, 20 // len(comps) + 1):
            if not all(isinstance(c, GaussRat) for c in y):
                continue
            try:
                assert count_all_solutions(f.f1 - y[0], f.f2 - y[1]) < mu
            except PositiveDimensional:
                pass
    off = 0
    while off < 20:
        y = (q(Fraction(rng.randint(-50, 50), rng.randint(1, 7))), q(Fraction(rng.randint(-50, 50), rng.randint(1, 7))))
        if any(c.contains(y) for c in comps):
            continue
        assert count_all_solutions(f.f1 - y[0], f.f2 - y[1]) == mu
        off += 1


def test_kf_fixtures():
    assert [k.point for k in kf_points(fixture("1.4"))] == [(q(2), q(2))]
    assert [k.point for k in kf_points(fixture("1.3"))] == [(q(0), q(1))]
    assert kf_points(PolyMap(u + v ** 3, v + 1)) == []


def test_kf_fixture_14_derivation():
    # on the origin face, D reduces to a multiple of Q(s) = 2 - s, whose
    # root s = 2 lies over the target (2, 2) of the diagonal component
    (k,) = kf_points(fixture("1.4"))
    assert tuple(k.face.normal) == (-1, 1)


@pytest.mark.parametrize("fid", ["1.2", "1.3", "1.4"])
def test_kf_inside_jelonek(fid):
    f = fixture(fid)
    comps = jelonek_set(f)
    for k in kf_points(f):
        assert any(c.contains(k.point) for c in comps)


@pytest.mark.parametrize("f", [fixture("1.2"), fixture("1.3"), make_lemma23(3, [1, 2, -1, 3])],
                         ids=["1.2", "1.3", "lemma23"])
def test_degree_equals_mixed_volume_for_generic_maps(f):
    assert genericity_check(f).passed
    pair = support_pair(f, augment=True)
    assert topological_degree(f)[0] == mixed_volume(pair.a1, pair.a2)


@pytest.mark.parametrize("f", [fixture("1.2"), fixture("1.3"), fixture("1.4"), make_thm14(2, [1, 3], [2, 5])],
                         ids=["1.2", "1.3", "1.4", "thm14"])
def test_transform_choice_independence(f):
    norm = normalize(f)
    first = jelonek_set(f, norm=norm)
    second = jelonek_set(f, norm=norm, transform_shift=1)
    assert len(first) == len(second)
    for a in first:
        assert any(sympy.simplify(implicit_sym(a) / implicit_sym(b)).is_number for b in second)
