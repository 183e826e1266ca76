"""Constructors for the extremal family, the universality family and the
three worked example maps."""
from __future__ import annotations

from dataclasses import dataclass

from . import univariate as up
from .polyring import GaussRat, Poly, PolyMap, as_gauss

__all__ = ["FamilySpec", "make_thm14", "make_lemma23", "fixture", "FIXTURES", "compose_uv"]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n_or_k: int = 1
    p_roots: tuple = ()
    q_roots: tuple = ()
    p_coeffs: tuple = ()
    fixture_id: str = ""

    def build(self) -> PolyMap:
        if self.kind == "thm14":
            return make_thm14(self.n_or_k, self.p_roots, self.q_roots)
        if self.kind == "lemma23":
            return make_lemma23(self.n_or_k, self.p_coeffs)
        if self.kind == "fixture":
            return fixture(self.fixture_id)
        raise ValueError(f"unknown family {self.kind!r}")


def compose_uv(coeffs) -> Poly:
    """``P(uv)`` for a coefficient list ``P`` (lowest first)."""
    return Poly({(k, k): c for k, c in enumerate(coeffs)})


def _from_roots(roots):
    p = [GaussRat(1)]
    for r in roots:
        p = up.mul(p, [-as_gauss(r), GaussRat(1)])
    return p


def make_thm14(n: int, p_roots, q_roots) -> PolyMap:
    """``(uv, v^2 P(uv) + v Q(uv) + uv)`` with monic ``P, Q`` of degree ``n``
    vanishing at the given roots."""
    p_roots = [as_gauss(r) for r in p_roots]
    q_roots = [as_gauss(r) for r in q_roots]
    if n < 1 or len(p_roots) != n or len(q_roots) != n:
        raise ValueError("need exactly n roots for each of P and Q")
    if any(not r for r in p_roots + q_roots):
        raise ValueError("P(0) and Q(0) must be non-zero")
    if set(p_roots) & set(q_roots):
        raise ValueError("P and Q must be coprime")
    P, Q = _from_roots(p_roots), _from_roots(q_roots)
    u, v = Poly.u(), Poly.v()
    return PolyMap(u * v, v * v * compose_uv(P) + v * compose_uv(Q) + u * v)


def make_lemma23(k: int, p_coeffs) -> PolyMap:
    """``(P(uv) + u^k v^(k+1), 1 + uv P(uv) + 2 u^(k+1) v^(k+2))``."""
    P = up.make(p_coeffs)
    if k < 1 or len(P) - 1 != k:
        raise ValueError("P must have degree k >= 1")
    if not P[0]:
        raise ValueError("P(0) must be non-zero")
    PP = compose_uv(P)
    u, v = Poly.u(), Poly.v()
    f1 = PP + Poly.monomial((k, k + 1))
    f2 = 1 + u * v * PP + Poly.monomial((k + 1, k + 2), 2)
    return PolyMap(f1, f2)


def _fixture_12():
    u, v = Poly.u(), Poly.v()
    return PolyMap(1 - u**2 * v**2 + u**2 * v**3, 1 + u * v - u**3 * v**3 + 2 * u**3 * v**4)


def _fixture_13():
    u, v = Poly.u(), Poly.v()
    w = 1 - u * v
    return PolyMap(w * w, 1 + v + u * v * w * w)


def _fixture_14():
    u, v = Poly.u(), Poly.v()
    return PolyMap(u * v, v**2 - u * v**3 + 2 * v - u * v**2 + u * v)


FIXTURES = {"1.2": _fixture_12, "1.3": _fixture_13, "1.4": _fixture_14}


def fixture(fid) -> PolyMap:
    key = str(fid)
    if key not in FIXTURES:
        raise ValueError(f"unknown fixture {fid!r}; expected one of {sorted(FIXTURES)}")
    return FIXTURES[key]()
