"""Unimodular monomial changes of variables attached to an edge face.

For a one-dimensional face ``Gamma`` of a pair, the basis ``(e1, e2)``
has ``e1`` along the face and every point of ``A1 + A2 - a`` in the cone
it spans, ``a`` being the face endpoint closest to the origin.  The
matrix ``u`` is the inverse of the basis matrix, so a monomial ``x**w``
becomes ``(s, t)**(u w)``.  New variables are written ``s, t`` in text but
stored as the ``u, v`` slots of :class:`Poly`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .lattice import FacePair, LatticePoint, SupportPair, dot, minkowski_sum, primitive
from .polyring import Poly, PolyMap

__all__ = [
    "UnimodularTransform", "ClearedPair", "build_transform", "apply_transform",
    "normal_image_check", "transform_choices",
]


@dataclass(frozen=True)
class UnimodularTransform:
    u: tuple          # ((a, b), (c, d)), rows
    e1: LatticePoint
    e2: LatticePoint
    base: LatticePoint

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.u
        return a * d - b * c

    def apply(self, w):
        (a, b), (c, d) = self.u
        return (a * w[0] + b * w[1], c * w[0] + d * w[1])

    def inverse_transpose(self, alpha):
        """Image of a covector: ``E^T alpha`` with ``E = u^{-1}``."""
        return (dot(self.e1, alpha), dot(self.e2, alpha))

    @classmethod
    def identity(cls):
        return cls(((1, 0), (0, 1)), LatticePoint(1, 0), LatticePoint(0, 1), LatticePoint(0, 0))

    @classmethod
    def from_matrix(cls, rows, base=(0, 0)):
        (a, b), (c, d) = rows
        det = a * d - b * c
        if det not in (1, -1):
            raise ValueError("matrix is not unimodular")
        # columns of the inverse
        e1 = LatticePoint(d * det, -c * det)
        e2 = LatticePoint(-b * det, a * det)
        return cls(((a, b), (c, d)), e1, e2, LatticePoint(*base))


@dataclass(frozen=True)
class ClearedPair:
    p1: Poly
    p2: Poly
    r1: tuple
    r2: tuple

    def __iter__(self):
        return iter((self.p1, self.p2))

    def __getitem__(self, i):
        return (self.p1, self.p2)[i]

    @property
    def shifts(self):
        return (self.r1, self.r2)


def _ext_gcd(a: int, b: int):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _face_frame(a: SupportPair, g: FacePair):
    if g.dim != 1:
        raise ValueError("toric transform needs a one-dimensional face")
    s = minkowski_sum(g.g1, g.g2)
    p, q = s.hull
    # endpoint closest to the origin; ties go to the positive first coordinate
    key = lambda z: (z[0] * z[0] + z[1] * z[1], -z[0], -z[1])
    base = min((p, q), key=key)
    other = q if base == p else p
    e1 = primitive((other[0] - base[0], other[1] - base[1]))
    return base, e1


def _k_max(a: SupportPair, base, e1, e2, alpha):
    """Largest ``k`` for which ``e2 + k e1`` keeps ``A1+A2-a`` in the cone."""
    total = minkowski_sum(a.a1, a.a2)
    det = e1[0] * e2[1] - e1[1] * e2[0]
    bound = None
    for w in total.points:
        d = (w[0] - base[0], w[1] - base[1])
        b2 = dot(alpha, d)
        # b1 from Cramer's rule on d = b1 e1 + b2 e2
        b1 = (d[0] * e2[1] - d[1] * e2[0]) // det
        if b2 == 0:
            assert b1 >= 0, "face base is not an endpoint"
            continue
        k = b1 // b2
        bound = k if bound is None else min(bound, k)
    return bound


def build_transform(a: SupportPair, g: FacePair, shift: int = 0) -> UnimodularTransform:
    """Transform for the edge face ``g``.  ``shift = 0`` gives the
    canonical completion ``e2``; ``shift = j > 0`` replaces it by the
    admissible completion ``e2 - j e1`` (all of these lie in the same
    family and are used to test choice independence)."""
    base, e1 = _face_frame(a, g)
    alpha = g.normal
    if dot(alpha, e1) != 0:
        raise ValueError("normal does not support the face")
    # alpha . e2 = 1 with alpha primitive
    gg, x, y = _ext_gcd(alpha[0], alpha[1])
    assert gg == 1
    e2 = (x, y)
    k = _k_max(a, base, e1, e2, alpha)
    if k is None:
        k = 0
    k -= shift
    e2 = LatticePoint(e2[0] + k * e1[0], e2[1] + k * e1[1])
    det = e1[0] * e2[1] - e1[1] * e2[0]
    assert det in (1, -1)
    # u = E^{-1}, E = [e1 e2] as columns
    u = ((e2[1] * det, -e2[0] * det), (-e1[1] * det, e1[0] * det))
    t = UnimodularTransform(u, e1, LatticePoint(*e2), LatticePoint(*base))
    for w in minkowski_sum(a.a1, a.a2).points:
        c = t.apply((w[0] - base[0], w[1] - base[1]))
        assert c[0] >= 0 and c[1] >= 0, "cone condition violated"
    return t


def transform_choices(a: SupportPair, g: FacePair, count: int = 2):
    return [build_transform(a, g, shift=j) for j in range(count)]


def _clear(p: Poly, t: UnimodularTransform):
    if p.is_zero():
        return p, (0, 0)
    img = p.map_exponents(t.apply)
    mx = min(e[0] for e in img.terms)
    my = min(e[1] for e in img.terms)
    r = (max(0, -mx), max(0, -my))
    return img.map_exponents(lambda e: (e[0] + r[0], e[1] + r[1])), r


def apply_transform(f, t: UnimodularTransform) -> ClearedPair:
    p1, p2 = (f.f1, f.f2) if isinstance(f, PolyMap) else f
    q1, r1 = _clear(p1, t)
    q2, r2 = _clear(p2, t)
    return ClearedPair(q1, q2, r1, r2)


def normal_image_check(t: UnimodularTransform, alpha) -> LatticePoint:
    """Image of the supporting covector ``alpha``; equals ``(0, 1)`` for the
    face the transform was built from."""
    return LatticePoint(*t.inverse_transpose(alpha))
