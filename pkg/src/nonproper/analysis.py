"""Map-level analysis: dominance, topological degree, the genericity
verdict, Jelonek components and the critical values at infinity ``K_f``.

All face computations run on a translate ``F = f + c`` with ``F(0,0)`` in
the torus; results are translated back before they leave this module.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import scalars as sc
from . import univariate as up
from .config import DEFAULT, Tolerances
from .faceclass import FaceClass, relevant_faces
from .lattice import FacePair, Support, SupportPair, is_independent, mixed_volume
from .polyring import GaussRat, Poly, PolyMap, jacobian, support_pair
from .solver import (NumericInconclusive, PositiveDimensional, count_all_solutions,
                     count_torus_solutions, resultant, univariate_roots)
from .toric import ClearedPair, UnimodularTransform, apply_transform, build_transform

__all__ = [
    "is_dominant", "topological_degree", "genericity_check", "GenericityVerdict",
    "JelonekComponent", "jelonek_set", "kf_points", "Normalized", "normalize",
    "implicitize", "FaceData", "face_data",
]

# ---------------------------------------------------------------------------
# dominance and degree


def is_dominant(f: PolyMap) -> bool:
    return not jacobian(f).det.is_zero()


def random_rational(rng: random.Random, span: int = 9) -> GaussRat:
    num = rng.randint(1, span) * rng.choice((1, -1))
    return GaussRat(Fraction(num, rng.randint(1, 4)))


def topological_degree(f: PolyMap, seed: int = 0, samples: int = 3, retries: int = 10):
    """Fiber cardinality over random rational targets.  Returns the agreed
    count together with the targets that were used."""
    rng = random.Random(f"degree-{seed}")
    if not is_dominant(f):
        raise ValueError("map is not dominant")
    for _ in range(retries):
        targets, counts = [], []
        for _ in range(samples):
            y = (GaussRat(Fraction(rng.randint(-97, 97), rng.randint(1, 13))),
                 GaussRat(Fraction(rng.randint(-97, 97), rng.randint(1, 13))))
            try:
                counts.append(count_all_solutions(f.f1 - y[0], f.f2 - y[1]))
                targets.append(y)
            except PositiveDimensional:
                continue
        if counts and len(set(counts)) == 1:
            return counts[0], targets
    raise NumericInconclusive("topological degree samples disagree")


# ---------------------------------------------------------------------------
# genericity


@dataclass
class GenericityVerdict:
    dominant: bool
    origin_in_torus: bool
    independent: bool
    sys_f1f2: tuple = (None, None)
    sys_f1J: tuple = (None, None)
    sys_f2J: tuple = (None, None)
    nonproper: bool = False
    verdict: str = "degenerate"
    reason: str = ""
    shift: tuple = (GaussRat(0), GaussRat(0))

    @property
    def passed(self) -> bool:
        return self.verdict == "generically_nonproper"

    def to_dict(self) -> dict:
        return {
            "dominant": self.dominant, "origin_in_torus": self.origin_in_torus,
            "independent": self.independent, "nonproper": self.nonproper,
            "sys_f1f2": list(self.sys_f1f2), "sys_f1J": list(self.sys_f1J),
            "sys_f2J": list(self.sys_f2J), "verdict": self.verdict,
            "reason": self.reason, "shift": [str(c) for c in self.shift],
        }


def _torus_count(p: Poly, q: Poly):
    try:
        return count_torus_solutions(p, q)
    except PositiveDimensional:
        return None


def _check_counts(F: PolyMap, det: Poly):
    A1, A2 = Support(F.f1.support), Support(F.f2.support)
    S = Support(det.support)
    targets = (int(mixed_volume(A1, A2)), int(mixed_volume(A1, S)), int(mixed_volume(A2, S)))
    systems = ((F.f1, F.f2), (F.f1, det), (F.f2, det))
    results = []
    for (p, q), target in zip(systems, targets):
        results.append((_torus_count(p, q), target))
    return results


def _shifts(f: PolyMap, seed: int, tries: int):
    c0 = f.at_origin()
    if c0[0] and c0[1]:
        yield (GaussRat(0), GaussRat(0))
    rng = random.Random(f"shift-{seed}")
    for _ in range(tries):
        c = (random_rational(rng), random_rational(rng))
        if (c0[0] + c[0]) and (c0[1] + c[1]):
            yield c


def genericity_check(f: PolyMap, seed: int = 0, tries: int = 6) -> GenericityVerdict:
    det = jacobian(f).det
    dominant = not det.is_zero()
    pair = support_pair(f, augment=True)
    independent = is_independent(pair)
    base = GenericityVerdict(dominant, False, independent)
    if not dominant:
        base.reason = "map is not dominant"
        return base
    if not independent:
        base.reason = "dependent support pair"
        return base
    faces = relevant_faces(pair).faces
    nonproper = bool(faces)
    first, first_bad = None, 4
    names = ("f1=f2=0", "f1=J=0", "f2=J=0")
    for c in _shifts(f, seed, tries):
        F = f.translate(c)
        counts = _check_counts(F, det)
        v = GenericityVerdict(dominant, True, independent, *counts, nonproper=nonproper, shift=c)
        bad = [n for n, (got, want) in zip(names, counts) if got != want]
        if not nonproper:
            v.verdict = "proper_candidate"
            return v
        if not bad:
            v.verdict = "generically_nonproper"
            return v
        v.reason = "torus count below mixed volume for " + ", ".join(bad)
        if first is None or len(bad) < first_bad:
            first, first_bad = v, len(bad)
    if first is None:
        base.reason = "no admissible translation found"
        return base
    return first


# ---------------------------------------------------------------------------
# normalization and per-face data


@dataclass
class Normalized:
    f: PolyMap
    F: PolyMap
    shift: tuple
    pair: SupportPair
    verdict: GenericityVerdict


def normalize(f: PolyMap, seed: int = 0, verdict: GenericityVerdict | None = None) -> Normalized:
    """Translate ``f`` so that the genericity clauses hold (or, failing
    that, so that at least ``F(0,0)`` lies in the torus)."""
    if verdict is None:
        verdict = genericity_check(f, seed)
    shift = verdict.shift
    c0 = f.at_origin()
    if not ((c0[0] + shift[0]) and (c0[1] + shift[1])):
        shift = next(_shifts(f, seed, 50))
    F = f.translate(shift)
    return Normalized(f, F, shift, support_pair(F, augment=True), verdict)


@dataclass
class FaceData:
    face: FacePair
    cls: FaceClass
    transform: UnimodularTransform
    cleared: ClearedPair
    # restrictions P_i(s, 0) of the cleared components, as coefficient lists
    rest: tuple
    origin_member: int | None   # index of the member holding the origin (half-origin faces)


def face_data(norm: Normalized, shift: int = 0):
    out = []
    for g, cls in relevant_faces(norm.pair).faces:
        if g.dim != 1:
            continue
        t = build_transform(norm.pair, g, shift=shift)
        cp = apply_transform(norm.F, t)
        rest = (cp.p1.specialize(1, 0), cp.p2.specialize(1, 0))
        j = None
        if cls.half_origin:
            j = 0 if (0, 0) in g.g1 else 1
        out.append(FaceData(g, cls, t, cp, rest, j))
    return out


# ---------------------------------------------------------------------------
# Jelonek components


def implicitize(g1, g2) -> Poly:
    """Normalized generator of the image of ``s -> (g1(s), g2(s))``:
    the resultant ``Res_s(g1 - y1, g2 - y2)`` in target variables."""
    m, n = len(g1) - 1, len(g2) - 1
    if m < 1 or n < 1:
        raise ValueError("both coordinates must be non-constant")
    q = Poly({(k, 0): c for k, c in enumerate(g2)}) - Poly.v()
    columns = []
    xs = [GaussRat(k) for k in range(n + 1)]
    for y1 in xs:
        p = Poly({(k, 0): c for k, c in enumerate(g1)}) - y1
        columns.append(resultant(p, q, eliminate=0))
    width = max(len(c) for c in columns)
    terms = {}
    for j in range(width):
        ys = [c[j] if j < len(c) else GaussRat(0) for c in columns]
        for i, coef in enumerate(up.interpolate(xs, ys)):
            if coef:
                terms[(i, j)] = coef
    return normalize_poly(Poly(terms))


def normalize_poly(p: Poly) -> Poly:
    """Scale so that the lexicographically largest term has coefficient 1."""
    if p.is_zero():
        return p
    lead = p.terms[max(p.terms)]
    return p * (GaussRat(1) / lead)


@dataclass
class JelonekComponent:
    kind: str                        # rational_curve | vertical_line | horizontal_line
    face: FacePair
    parametrization: object          # (g1, g2) coefficient lists, or the line position
    implicit: Poly | None            # None only for lines at inexact positions
    param_shift: int = 0             # exponent of s dividing the parametrization (curves)

    @property
    def exact(self) -> bool:
        return self.implicit is not None

    def position(self):
        return self.parametrization

    def point_at(self, s):
        """Point on the component: curve parameter ``s``, or the free
        coordinate for a line."""
        if self.kind == "rational_curve":
            g1, g2 = self.parametrization
            return (sc.ueval(g1, s), sc.ueval(g2, s))
        if self.kind == "vertical_line":
            return (self.parametrization, s)
        return (s, self.parametrization)

    def contains(self, y, tol: Tolerances = DEFAULT) -> bool:
        if self.kind == "vertical_line":
            return sc.close(y[0], self.parametrization, tol.dedup_radius)
        if self.kind == "horizontal_line":
            return sc.close(y[1], self.parametrization, tol.dedup_radius)
        if sc.is_exact(y[0]) and sc.is_exact(y[1]):
            return not self.implicit.eval_exact(y[0], y[1])
        with mpmath.workprec(tol.precision_bits):
            a, b = sc.to_mp(y[0]), sc.to_mp(y[1])
            val = abs(sum(c.to_mpc() * a ** i * b ** j for (i, j), c in self.implicit.terms.items()))
            scale = sum(abs(c.to_mpc()) * abs(a) ** i * abs(b) ** j for (i, j), c in self.implicit.terms.items())
            return val <= tol.implicit_residual * max(1, scale)

    def same_as(self, other: "JelonekComponent", tol: Tolerances = DEFAULT) -> bool:
        if self.kind != other.kind:
            return False
        if self.kind == "rational_curve":
            return self.implicit == other.implicit
        return sc.close(self.parametrization, other.parametrization, tol.dedup_radius)

    def describe(self) -> str:
        if self.kind == "vertical_line":
            return f"s = {sc.to_text(self.parametrization)}"
        if self.kind == "horizontal_line":
            return f"t = {sc.to_text(self.parametrization)}"
        return str(self.implicit).replace("u", "s").replace("v", "t") + " = 0"


def _line(kind, face, pos):
    if sc.is_exact(pos):
        implicit = (Poly.u() if kind == "vertical_line" else Poly.v()) - pos
    else:
        implicit = None
    return JelonekComponent(kind, face, pos, implicit)


def _nonzero_roots(coeffs, tol):
    rest, _ = up.strip_x(up.make(coeffs))
    return [r for r in univariate_roots(rest, tol)]


def _root_value(r):
    return r.exact if r.exact is not None else r.value


def face_components(norm: Normalized, fd: FaceData, tol: Tolerances = DEFAULT):
    c = norm.shift
    g = fd.face
    kinds = ("vertical_line", "horizontal_line")
    if fd.cls.origin:
        if fd.cls.long:
            g1 = up.add(fd.rest[0], [-c[0]])
            g2 = up.add(fd.rest[1], [-c[1]])
            return [JelonekComponent("rational_curve", g, (g1, g2), implicitize(g1, g2))]
        k = 0 if g.g1.dim == 0 else 1
        return [_line(kinds[k], g, norm.f[k].constant_term())]
    j = fd.origin_member
    k = 1 - j
    rj = fd.cleared.shifts[j]
    out = []
    for root in _nonzero_roots(fd.rest[k], tol):
        s = _root_value(root)
        val = sc.div(sc.ueval(fd.rest[j], s), sc.power(s, rj[0]))
        comp = _line(kinds[j], g, sc.sub(val, c[j]))
        if not any(comp.same_as(o, tol) for o in out):
            out.append(comp)
    return out


def jelonek_set(f: PolyMap, seed: int = 0, norm: Normalized | None = None,
                transform_shift: int = 0, tol: Tolerances = DEFAULT):
    """Explicit components of the Jelonek set, one group per relevant
    edge face, merged when they coincide."""
    norm = norm or normalize(f, seed)
    out = []
    for fd in face_data(norm, transform_shift):
        for comp in face_components(norm, fd, tol):
            if not any(comp.same_as(o, tol) for o in out):
                out.append(comp)
    return out


# ---------------------------------------------------------------------------
# critical values at infinity


@dataclass
class KPoint:
    point: tuple
    face: FacePair


def _eval_at_t0(p: Poly, s):
    return sc.ueval(p.specialize(1, 0), s)


def face_kf(norm: Normalized, fd: FaceData, tol: Tolerances = DEFAULT):
    """K_f points contributed by one face, plus degeneracy notes."""
    c = norm.shift
    P1, P2 = fd.cleared.p1, fd.cleared.p2
    notes = []
    pts = []
    if fd.cls.origin:
        a1s, a1t = P1.diff(0).specialize(1, 0), P1.diff(1).specialize(1, 0)
        a2s, a2t = P2.diff(0).specialize(1, 0), P2.diff(1).specialize(1, 0)
        D = up.sub(up.mul(a1s, a2t), up.mul(a1t, a2s))
        if not D:
            notes.append("jacobian restriction vanishes identically")
            return pts, notes
        for root in _nonzero_roots(D, tol):
            s = _root_value(root)
            y = (sc.sub(sc.ueval(fd.rest[0], s), c[0]), sc.sub(sc.ueval(fd.rest[1], s), c[1]))
            pts.append(KPoint(y, fd.face))
        return pts, notes
    j = fd.origin_member
    k = 1 - j
    rj, rk = fd.cleared.shifts[j], fd.cleared.shifts[k]
    Pj, Pk = (P1, P2)[j], (P1, P2)[k]
    wk = rk[1]
    for root in _nonzero_roots(fd.rest[k], tol):
        s = _root_value(root)
        yj = sc.div(sc.ueval(fd.rest[j], s), sc.power(s, rj[0]))
        dsj = sc.sub(_eval_at_t0(Pj.diff(0), s), sc.mul(sc.mul(yj, GaussRat(rj[0])), sc.power(s, rj[0] - 1))
                     if rj[0] else GaussRat(0))
        dtj = _eval_at_t0(Pj.diff(1), s)
        dsk = _eval_at_t0(Pk.diff(0), s)
        dtk0 = _eval_at_t0(Pk.diff(1), s)
        # d_t G_k = dtk0 - [wk == 1] * y_k * s^{rk.x}
        coef_yk = sc.power(s, rk[0]) if wk == 1 else GaussRat(0)
        sign = 1 if j == 0 else -1
        # det = d_s G1 d_t G2 - d_t G1 d_s G2; with (j, k) = (0, 1) or (1, 0)
        const = sc.mul(GaussRat(sign), sc.sub(sc.mul(dsj, dtk0), sc.mul(dtj, dsk)))
        lin = sc.mul(GaussRat(-sign), sc.mul(dsj, coef_yk))
        if sc.is_zero(lin):
            if sc.is_zero(const):
                notes.append("jacobian vanishes along a whole line")
            continue
        yk = sc.div(sc.mul(GaussRat(-1), const), lin)
        y = [None, None]
        y[j] = sc.sub(yj, c[j])
        y[k] = sc.sub(yk, c[k])
        pts.append(KPoint(tuple(y), fd.face))
    return pts, notes


def kf_points(f: PolyMap, seed: int = 0, norm: Normalized | None = None,
              transform_shift: int = 0, tol: Tolerances = DEFAULT, notes: list | None = None):
    norm = norm or normalize(f, seed)
    out = []
    for fd in face_data(norm, transform_shift):
        pts, n = face_kf(norm, fd, tol)
        if notes is not None:
            notes.extend((fd.face, msg) for msg in n)
        for p in pts:
            if not any(sc.points_close(p.point, q.point, tol.dedup_radius) for q in out):
                out.append(p)
    out.sort(key=lambda p: sc.point_sort_key(p.point))
    return out
