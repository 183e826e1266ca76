import random
from fractions import Fraction

import pytest

from nonproper.families import fixture, make_lemma23, make_thm14
from nonproper.missing import (bounds_table, cross_candidates, cusp_candidates,
                               intersection_candidates, missing_points, node_candidates, prepare,
                               verify_candidate)
from nonproper.polyring import GaussRat, Poly, PolyMap

from oracles import fiber_empty_oracle

q = GaussRat
u, v = Poly.u(), Poly.v()


def pts(cands):
    return {c.point for c in cands}


def test_node_candidate_fixture_12():
    assert (q(0), q(1)) in pts(node_candidates(fixture("1.2")))


def test_node_candidates_family():
    f = make_thm14(2, [1, 3], [2, 5])
    found = pts(node_candidates(f)) | pts(cross_candidates(f)) | pts(cusp_candidates(f))
    ctx = prepare(f)
    found |= pts(intersection_candidates(f, ctx))
    for a in (1, 3, 2, 5):
        assert (q(a), q(a)) in found


def test_fixture_14_candidate_sources():
    f = fixture("1.4")
    ctx = prepare(f)
    assert pts(cusp_candidates(f, ctx)) == {(q(2), q(2))}
    assert (q(1), q(1)) in pts(intersection_candidates(f, ctx))


def test_cross_candidate_fixture_13():
    assert (q(0), q(1)) in pts(cross_candidates(fixture("1.3")))


def test_cross_candidates_generic_map_empty():
    # a triangular map has no relevant faces, hence no cross candidates
    assert cross_candidates(PolyMap(u + v ** 3, v + 1)) == []


def test_cusp_candidates():
    assert pts(cusp_candidates(fixture("1.3"))) == {(q(0), q(1))}
    assert cusp_candidates(PolyMap(u + v ** 2, v)) == []


@pytest.mark.parametrize("y,expected", [((1, 1), "missing_isolated"), ((3, 3), "attained"),
                                        ((2, 2), "missing_isolated")])
def test_verify_fixture_14(y, expected):
    f = fixture("1.4")
    yy = (q(y[0]), q(y[1]))
    assert verify_candidate(f, yy) == expected
    assert fiber_empty_oracle(f.f1, f.f2, yy) == (expected != "attained")


def test_verify_nonisolated():
    # (u, u v) misses the whole line {s = 0} except the origin
    f = PolyMap(u, u * v)
    assert verify_candidate(f, (q(0), q(1))) == "missing_nonisolated"


def test_missing_fixture_14():
    rep = missing_points(fixture("1.4"))
    assert rep.points == [(q(1), q(1)), (q(2), q(2))]
    assert all(tier == "exact" for _, tier in rep.verified)
    assert all(rep.satisfied.values())
    assert rep.bounds["six_deg"] == 24


def test_missing_family_n3():
    f = make_thm14(3, [1, -2, Fraction(1, 2)], [3, -1, 4])
    rep = missing_points(f)
    assert len(rep.points) == 6 and f.degree == 8
    assert all(a == b for a, b in rep.points)


def test_regions_partition():
    for f in (fixture("1.2"), fixture("1.3"), fixture("1.4"), make_lemma23(3, [1, 2, -1, 3])):
        rep = missing_points(f)
        flat = [p for region in rep.regions.values() for p in region]
        assert sorted(flat, key=str) == sorted(rep.points, key=str)


def test_bounds_table_values():
    b = bounds_table(2, 4, 2)
    assert b == {"six_deg": 24, "formula_11": 16, "prop22": 6, "prop24": 6,
                 "prop25a": 3, "prop25b": 8}
    assert bounds_table(3, 3, 1)["formula_11"] is None


def test_triangular_maps_have_no_missing_points():
    rng = random.Random(12)
    for _ in range(5):
        p = Poly({(0, k): q(rng.randint(-4, 4)) for k in range(1, 4)})
        f = PolyMap(u + p, v + rng.randint(1, 5))
        rep = missing_points(f)
        assert rep.points == [] and rep.mu == 1
