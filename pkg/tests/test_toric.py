import random

import pytest
from hypothesis import given, settings, strategies as st

from nonproper.families import fixture
from nonproper.lattice import Support, SupportPair, enumerate_face_pairs, minkowski_sum
from nonproper.mapfile import parse_poly
from nonproper.polyring import GaussRat, Poly, support_pair
from nonproper.solver import PositiveDimensional, count_torus_solutions
from nonproper.toric import (UnimodularTransform, apply_transform, build_transform,
                             normal_image_check, transform_choices)

FIG1 = SupportPair(Support([(0, 0), (1, 2), (2, 4), (1, 3), (2, 5)]), Support([(0, 0), (1, 0), (2, 2)]))
u, v = Poly.u(), Poly.v()


def face(pair, normal):
    return next(g for g in enumerate_face_pairs(pair) if tuple(g.normal) == normal)


def st_poly(text):
    """Polynomial written in the transformed variables ``s, t``."""
    return parse_poly(text.replace("s", "u").replace("t", "v"))


def test_figure_basis():
    t = build_transform(FIG1, face(FIG1, (-2, 1)))
    assert (t.e1, t.e2) == ((1, 2), (-1, -1))
    assert normal_image_check(t, (-2, 1)) == (0, 1)


def test_example_transform_first_component():
    phi1 = parse_poly("1 + 2*u*v^2 + 3*u^2*v^4 + 4*u*v^3 + 5*u^2*v^5")
    phi2 = parse_poly("-1 - 2*u - 3*u^2*v^2")
    t = build_transform(FIG1, face(FIG1, (-2, 1)))
    c = apply_transform((phi1, phi2), t)
    assert c.p1 == st_poly("1+2s+3s^2+4s^2t+5s^3t")
    assert (c.r1, c.r2) == ((0, 0), (1, 2))


def test_fixture_origin_face():
    pair = support_pair(fixture("1.4"), augment=True)
    t = build_transform(pair, face(pair, (-1, 1)))
    assert t.e1 == (1, 1)
    assert abs(t.det) == 1
    assert normal_image_check(t, (-1, 1)) == (0, 1)
    t2 = build_transform(pair, face(pair, (1, -1)))
    assert normal_image_check(t2, (1, -1)) == (0, 1)


def test_axis_face_gives_identity():
    pair = SupportPair(Support([(0, 0), (1, 0), (0, 1)]), Support([(0, 0), (2, 0), (1, 1)]))
    t = build_transform(pair, face(pair, (0, 1)))
    assert (t.e1, t.e2) == ((1, 0), (0, 1))
    assert t.u == ((1, 0), (0, 1))


def test_vertex_face_rejected():
    pair = SupportPair(Support([(0, 0), (1, 0), (0, 1)]), Support([(0, 0), (1, 0), (0, 1)]))
    g = next(g for g in enumerate_face_pairs(pair) if g.dim == 0)
    with pytest.raises(ValueError):
        build_transform(pair, g)


def test_apply_identity_and_shear():
    p, q = 1 + u * v ** 2, 3 * u - v
    c = apply_transform((p, q), UnimodularTransform.identity())
    assert (c.p1, c.p2, c.r1, c.r2) == (p, q, (0, 0), (0, 0))
    c = apply_transform((u * v, u), UnimodularTransform.from_matrix(((1, 0), (-1, 1))))
    assert c.p1 == u and c.r1 == (0, 0)


points = st.tuples(st.integers(0, 4), st.integers(0, 4))
supports = st.sets(points, min_size=2, max_size=5)


@settings(max_examples=100, deadline=None)
@given(supports, supports)
def test_transform_contract(a, b):
    pair = SupportPair(Support(a | {(0, 0)}), Support(b | {(0, 0)}))
    total = minkowski_sum(pair.a1, pair.a2)
    for g in enumerate_face_pairs(pair):
        if g.dim != 1:
            continue
        for t in transform_choices(pair, g):
            assert abs(t.det) == 1
            assert t.apply(t.e1) == (1, 0) and t.apply(t.e2) == (0, 1)
            assert normal_image_check(t, g.normal) == (0, 1)
            for p in total.points:
                img = t.apply((p[0] - t.base[0], p[1] - t.base[1]))
                assert img[0] >= 0 and img[1] >= 0


def test_face_restriction_is_univariate():
    rng = random.Random(2)
    for _ in range(30):
        p = Poly({(rng.randint(0, 4), rng.randint(0, 4)): GaussRat(rng.randint(1, 5)) for _ in range(4)}) + 1
        q = Poly({(rng.randint(0, 4), rng.randint(0, 4)): GaussRat(rng.randint(1, 5)) for _ in range(4)}) + 2
        pair = SupportPair(Support(p.support), Support(q.support))
        for g in enumerate_face_pairs(pair):
            if g.dim != 1:
                continue
            t = build_transform(pair, g)
            c = apply_transform((p, q), t)
            for orig, member, cleared, r in ((p, g.g1, c.p1, c.r1), (q, g.g2, c.p2, c.r2)):
                img = orig.restrict(member.points).map_exponents(t.apply)
                assert len({e[1] for e in img.terms}) == 1
                # setting t = 0 in the cleared component recovers the face part
                slice0 = Poly({e: cf for e, cf in cleared.terms.items() if e[1] == 0})
                shifted = img.map_exponents(lambda e: (e[0] + r[0], e[1] + r[1]))
                assert slice0 == shifted


def test_torus_count_invariance():
    rng = random.Random(19)
    done = 0
    while done < 50:
        p = Poly({(rng.randint(0, 3), rng.randint(0, 3)): GaussRat(rng.randint(-4, 4)) for _ in range(4)})
        q = Poly({(rng.randint(0, 3), rng.randint(0, 3)): GaussRat(rng.randint(-4, 4)) for _ in range(4)})
        if p.is_zero() or q.is_zero():
            continue
        pair = SupportPair(Support(p.support), Support(q.support))
        edges = [g for g in enumerate_face_pairs(pair) if g.dim == 1]
        if not edges:
            continue
        t = build_transform(pair, rng.choice(edges), shift=rng.randint(0, 1))
        c = apply_transform((p, q), t)
        try:
            before = count_torus_solutions(p, q)
        except PositiveDimensional:
            continue
        assert count_torus_solutions(c.p1, c.p2) == before
        done += 1
