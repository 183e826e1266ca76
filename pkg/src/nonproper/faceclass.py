"""Origin / coordinate / relevant classification of face pairs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .lattice import FacePair, SupportPair, enumerate_face_pairs, is_independent

__all__ = ["FaceClass", "classify_face", "relevant_faces", "RelevantFaces"]

ORIGIN = (0, 0)


@dataclass(frozen=True)
class FaceClass:
    semi_origin: bool
    origin: bool
    half_origin: bool
    coordinate: bool
    relevant: bool
    long: bool
    side: str  # "left", "right" or "none"

    def flags(self) -> dict:
        return {
            "semi_origin": self.semi_origin, "origin": self.origin,
            "half_origin": self.half_origin, "coordinate": self.coordinate,
            "relevant": self.relevant, "long": self.long, "side": self.side,
        }


def _is_coordinate(g: FacePair) -> bool:
    # Only an edge of the sum has a single supporting direction; vertex
    # cones have interior vectors off the axes.
    if g.dim != 1:
        return False
    return tuple(g.normal) in {(1, 0), (0, 1)}


def _mixed_sign_support(g: FacePair) -> bool:
    """Whether some supporting vector has coordinates of opposite signs."""
    if g.dim == 1 or not g.cone:
        a = tuple(g.normal)
        return a[0] * a[1] < 0
    lo, hi = g.cone
    if lo[0] * hi[1] - lo[1] * hi[0] <= 0:
        return True  # a half-plane always meets both mixed quadrants
    for sign in (1, -1):
        if all(sign * c >= 0 for c in (*lo, *hi)):
            return False  # the open cone lies in a closed same-sign quadrant
    return True


def classify_face(g: FacePair) -> FaceClass:
    if tuple(g.normal) == (0, 0):
        raise ValueError("the trivial face has no classification")
    in1, in2 = ORIGIN in g.g1, ORIGIN in g.g2
    semi = in1 or in2
    origin = in1 and in2
    coordinate = _is_coordinate(g)
    stray_point = any(m.dim == 0 and ORIGIN not in m for m in (g.g1, g.g2))
    relevant = semi and not coordinate and not stray_point and _mixed_sign_support(g)
    long = g.g1.dim == 1 and g.g2.dim == 1
    side = "none"
    if g.dim == 1 and g.normal[0] != 0:
        side = "left" if g.normal[0] > 0 else "right"
    return FaceClass(semi, origin, semi and not origin, coordinate, relevant, long, side)


class RelevantFaces(NamedTuple):
    faces: list        # (FacePair, FaceClass) pairs
    long_left: int
    long_right: int


def relevant_faces(a: SupportPair, check_independent: bool = True) -> RelevantFaces:
    if check_independent and not is_independent(a):
        raise ValueError("dependent support pair")
    out = []
    for g in enumerate_face_pairs(a):
        c = classify_face(g)
        if c.relevant:
            out.append((g, c))
    left = sum(1 for _, c in out if c.long and c.side == "left")
    right = sum(1 for _, c in out if c.long and c.side == "right")
    return RelevantFaces(out, left, right)
