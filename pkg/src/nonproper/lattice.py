"""Planar lattice geometry: hulls, Minkowski sums, mixed volumes and the
face pairs of a pair of supports.

Faces minimise a linear form: the face of ``A`` supported by ``alpha`` is
the set of points of ``A`` where ``alpha . x`` is smallest.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple

__all__ = [
    "LatticePoint", "Support", "SupportPair", "FacePair",
    "convex_hull", "minkowski_sum", "mixed_volume", "is_independent",
    "integer_length", "enumerate_face_pairs", "area", "primitive", "dot",
    "cross",
]


class LatticePoint(NamedTuple):
    x: int
    y: int


def dot(a, b) -> int:
    return a[0] * b[0] + a[1] * b[1]


def cross(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def primitive(v):
    g = gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return LatticePoint(v[0] // g, v[1] // g)


def convex_hull(points):
    """Counter-clockwise hull vertices without collinear points."""
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty set")
    if len(pts) <= 2:
        return [LatticePoint(*p) for p in pts]

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(
                    (out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                    (p[0] - out[-2][0], p[1] - out[-2][1])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return [LatticePoint(*p) for p in hull]


@dataclass(frozen=True)
class Support:
    """A finite set of lattice points with its hull cached."""
    points: frozenset
    hull: tuple = field(compare=False, repr=False, default=())

    def __init__(self, points, hull=None):
        pts = frozenset(LatticePoint(int(p[0]), int(p[1])) for p in points)
        if not pts:
            raise ValueError("empty support")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "hull", tuple(convex_hull(pts)))

    @property
    def dim(self) -> int:
        return min(len(self.hull) - 1, 2)

    def __contains__(self, p):
        return (p[0], p[1]) in self.points

    def __iter__(self):
        return iter(sorted(self.points))

    def __len__(self):
        return len(self.points)

    def min_value(self, alpha) -> int:
        return min(dot(alpha, p) for p in self.points)

    def face(self, alpha) -> "Support":
        m = self.min_value(alpha)
        return Support(p for p in self.points if dot(alpha, p) == m)

    def translate(self, t) -> "Support":
        return Support((p[0] + t[0], p[1] + t[1]) for p in self.points)

    def sorted_points(self):
        return sorted(self.points)

    def __repr__(self):
        return f"Support({sorted(tuple(p) for p in self.points)})"


@dataclass(frozen=True)
class SupportPair:
    a1: Support
    a2: Support

    def __iter__(self):
        return iter((self.a1, self.a2))

    def __getitem__(self, i):
        return (self.a1, self.a2)[i]

    @property
    def sum(self) -> Support:
        return minkowski_sum(self.a1, self.a2)


@dataclass(frozen=True)
class FacePair:
    """Face ``(g1, g2)`` of a pair with a primitive minimising normal."""
    g1: Support
    g2: Support
    normal: LatticePoint
    dim: int
    # normal cone of the face in the Minkowski sum, as its two boundary
    # rays (equal for an edge)
    cone: tuple = field(compare=False, default=())

    def __getitem__(self, i):
        return (self.g1, self.g2)[i]

    def __iter__(self):
        return iter((self.g1, self.g2))

    @property
    def sum(self) -> Support:
        return minkowski_sum(self.g1, self.g2)

    def key(self):
        return (tuple(self.normal), tuple(sorted(self.g1.points)), tuple(sorted(self.g2.points)))

    def __repr__(self):
        return (f"FacePair(normal={tuple(self.normal)}, g1={sorted(map(tuple, self.g1.points))}, "
                f"g2={sorted(map(tuple, self.g2.points))})")


def minkowski_sum(a: Support, b: Support) -> Support:
    return Support((p[0] + q[0], p[1] + q[1]) for p in a.points for q in b.points)


def area(s) -> Fraction:
    """Area of the convex hull of a support or of a vertex list."""
    hull = s.hull if isinstance(s, Support) else convex_hull(s)
    if len(hull) < 3:
        return Fraction(0)
    twice = 0
    for k, p in enumerate(hull):
        q = hull[(k + 1) % len(hull)]
        twice += p[0] * q[1] - p[1] * q[0]
    return Fraction(twice, 2)


def mixed_volume(a: Support, b: Support) -> Fraction:
    return area(minkowski_sum(a, b)) - area(a) - area(b)


def is_independent(a: SupportPair) -> bool:
    return mixed_volume(a.a1, a.a2) > 0


def integer_length(s) -> int:
    hull = s.hull if isinstance(s, Support) else convex_hull(s)
    if len(hull) != 2:
        raise ValueError("integer length needs a one-dimensional support")
    p, q = hull
    return gcd(q[0] - p[0], q[1] - p[1])


def _edge_normal(p, q):
    """Inward normal of the counter-clockwise edge ``p -> q``."""
    return primitive((-(q[1] - p[1]), q[0] - p[0]))


def _inside(alpha, n_prev, n_next) -> bool:
    return cross(n_prev, alpha) > 0 and cross(alpha, n_next) > 0


def _cone_representative(n_prev, n_next):
    """Primitive vector of least sup-norm strictly inside the cone spanned
    by ``n_prev`` then ``n_next`` (counter-clockwise), ties broken
    lexicographically."""
    r = 1
    while True:
        ring = [(x, y) for x in range(-r, r + 1) for y in range(-r, r + 1)
                if max(abs(x), abs(y)) == r and gcd(x, y) == 1]
        hits = sorted(p for p in ring if _inside(p, n_prev, n_next))
        if hits:
            return LatticePoint(*hits[0])
        r += 1


def enumerate_face_pairs(a: SupportPair):
    """All non-trivial face pairs, edges first in counter-clockwise order,
    then vertices."""
    s = minkowski_sum(a.a1, a.a2)
    hull = s.hull
    if len(hull) == 1:
        return []

    def make(alpha, cone):
        g1, g2 = a.a1.face(alpha), a.a2.face(alpha)
        dim = 1 if len(minkowski_sum(g1, g2).hull) == 2 else 0
        return FacePair(g1, g2, LatticePoint(*alpha), dim, cone)

    out = []
    if len(hull) == 2:
        p, q = hull
        d = (q[0] - p[0], q[1] - p[1])
        # normals with positive product against d select p, negative select q
        for sign in (1, -1):
            n = (sign * d[0], sign * d[1])
            left, right = (n[1], -n[0]), (-n[1], n[0])
            alpha = _cone_representative(left, right)
            out.append(make(alpha, (primitive(left), primitive(right))))
        return out

    normals = [_edge_normal(hull[k], hull[(k + 1) % len(hull)]) for k in range(len(hull))]
    for n in normals:
        out.append(make(n, (n, n)))
    for k in range(len(hull)):
        n_prev, n_next = normals[k - 1], normals[k]
        alpha = _cone_representative(n_prev, n_next)
        out.append(make(alpha, (n_prev, n_next)))
    return out
