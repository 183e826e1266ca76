"""Candidate generation, verification and bound checks for isolated
missing points.

Candidates come from four sources (self-intersections of rational
components, points on the cross through ``f(0,0)``, ``K_f`` and pairwise
intersections of components).  Soundness rests entirely on
:func:`verify_candidate`, so the candidate set may be generous.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import scalars as sc
from . import univariate as up
from .analysis import (JelonekComponent, Normalized, jelonek_set, kf_points, normalize,
                       topological_degree)
from .config import DEFAULT, Tolerances
from .polyring import GaussRat, Poly, PolyMap
from .solver import (NumericInconclusive, PositiveDimensional, fiber_is_empty,
                     fiber_is_empty_numeric, rationalize, resultant, univariate_roots)

__all__ = [
    "Candidate", "MissingReport", "node_candidates", "cross_candidates", "cusp_candidates",
    "intersection_candidates", "verify_candidate", "missing_points", "bounds_table",
    "Context", "prepare",
]


@dataclass
class Candidate:
    point: tuple
    source: str                   # node | cross | cusp | component_intersection
    face_data: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return sc.is_exact(self.point[0]) and sc.is_exact(self.point[1])


@dataclass
class Context:
    """Everything the candidate generators share for one map."""
    f: PolyMap
    norm: Normalized
    components: list
    kpoints: list
    notes: list
    tol: Tolerances
    seed: int

    @property
    def center(self):
        return self.f.at_origin()


def prepare(f: PolyMap, seed: int = 0, tol: Tolerances = DEFAULT, verdict=None) -> Context:
    norm = normalize(f, seed, verdict)
    notes = []
    comps = jelonek_set(f, norm=norm, tol=tol)
    kps = kf_points(f, norm=norm, tol=tol, notes=notes)
    return Context(f, norm, comps, kps, notes, tol, seed)


def _ctx(f, ctx, seed=0, tol=DEFAULT):
    return ctx if ctx is not None else prepare(f, seed, tol)


def _root_values(coeffs, tol, drop_zero=True):
    coeffs = up.make(coeffs)
    if drop_zero:
        coeffs, _ = up.strip_x(coeffs)
    if len(coeffs) <= 1:
        return []
    return [r.exact if r.exact is not None else r.value for r in univariate_roots(coeffs, tol)]


# ---------------------------------------------------------------------------
# generators


def _divided_difference(g) -> Poly:
    """``(g(r) - g(s)) / (r - s)`` as a polynomial in ``(r, s)``."""
    terms = {}
    for k, c in enumerate(g):
        for a in range(k):
            e = (a, k - 1 - a)
            terms[e] = terms.get(e, GaussRat(0)) + c
    return Poly(terms)


def node_candidates(f: PolyMap, ctx: Context | None = None, seed: int = 0, tol: Tolerances = DEFAULT):
    ctx = _ctx(f, ctx, seed, tol)
    out = []
    for comp in ctx.components:
        if comp.kind != "rational_curve":
            continue
        g1, g2 = comp.parametrization
        d1, d2 = _divided_difference(g1), _divided_difference(g2)
        if d1.is_constant() or d2.is_constant():
            # injective coordinate: no self-intersections
            continue
        r = resultant(d1, d2, eliminate=1)
        if not r:
            ctx.notes.append((comp.face, "self-intersection system is not zero-dimensional"))
            continue
        for root in _root_values(r, tol):
            out.append(Candidate(comp.point_at(root), "node", [comp.face]))
    return out


def _cross_points(comp: JelonekComponent, center, tol):
    out = []
    if comp.kind == "rational_curve":
        for axis in (0, 1):
            g = comp.parametrization[axis]
            shifted = up.sub(g, [center[axis]])
            for s in _root_values(shifted, tol):
                out.append(comp.point_at(s))
        return out
    axis = 0 if comp.kind == "vertical_line" else 1
    other = 1 - axis
    y = [None, None]
    y[axis] = comp.parametrization
    y[other] = center[other]
    return [tuple(y)]


def cross_candidates(f: PolyMap, ctx: Context | None = None, seed: int = 0, tol: Tolerances = DEFAULT):
    ctx = _ctx(f, ctx, seed, tol)
    out = []
    for comp in ctx.components:
        for p in _cross_points(comp, ctx.center, tol):
            out.append(Candidate(p, "cross", [comp.face]))
    return out


def cusp_candidates(f: PolyMap, ctx: Context | None = None, seed: int = 0, tol: Tolerances = DEFAULT):
    ctx = _ctx(f, ctx, seed, tol)
    return [Candidate(k.point, "cusp", [k.face]) for k in ctx.kpoints]


def _curve_line(curve, line, tol):
    axis = 0 if line.kind == "vertical_line" else 1
    g = curve.parametrization[axis]
    pos = line.parametrization
    if sc.is_exact(pos):
        return [curve.point_at(s) for s in _root_values(up.sub(g, [pos]), tol, drop_zero=False)]
    coeffs = [sc.to_mp(c) for c in g]
    coeffs[0] -= sc.to_mp(pos)
    with mpmath.workprec(tol.precision_bits):
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=tol.max_iterations,
                                 extraprec=tol.precision_bits, error=False) if len(coeffs) > 1 else []
    return [curve.point_at(s) for s in roots]


def _curve_curve(a, b, tol):
    """Points ``b(r)`` with ``a(s) = b(r)`` for some ``s``."""
    (a1, a2), (b1, b2) = a.parametrization, b.parametrization
    p = Poly({(k, 0): c for k, c in enumerate(a1)}) - Poly({(0, k): c for k, c in enumerate(b1)})
    q = Poly({(k, 0): c for k, c in enumerate(a2)}) - Poly({(0, k): c for k, c in enumerate(b2)})
    r = resultant(p, q, eliminate=0)
    if not r:
        return []
    return [b.point_at(s) for s in _root_values(r, tol, drop_zero=False)]


def intersection_candidates(f: PolyMap, ctx: Context | None = None, seed: int = 0, tol: Tolerances = DEFAULT):
    ctx = _ctx(f, ctx, seed, tol)
    comps = ctx.components
    out = []
    for i, a in enumerate(comps):
        for b in comps[i + 1:]:
            pts = []
            kinds = {a.kind, b.kind}
            if kinds == {"vertical_line", "horizontal_line"}:
                v, h = (a, b) if a.kind == "vertical_line" else (b, a)
                pts = [(v.parametrization, h.parametrization)]
            elif a.kind == "rational_curve" and b.kind == "rational_curve":
                pts = _curve_curve(a, b, tol)
            elif "rational_curve" in kinds:
                curve, line = (a, b) if a.kind == "rational_curve" else (b, a)
                pts = _curve_line(curve, line, tol)
            out.extend(Candidate(p, "component_intersection", [a.face, b.face]) for p in pts)
    return out


# ---------------------------------------------------------------------------
# verification


def _fiber_empty(f: PolyMap, y, tol) -> bool:
    if sc.is_exact(y[0]) and sc.is_exact(y[1]):
        return fiber_is_empty(f.f1 - y[0], f.f2 - y[1])
    return fiber_is_empty_numeric(f.f1, f.f2, y, tol)


def _samples(comp: JelonekComponent, y, rng: random.Random, count: int = 5):
    pts = []
    for _ in range(count):
        s = GaussRat(Fraction(rng.randint(-60, 60) or 1, rng.randint(1, 7)))
        if comp.kind == "rational_curve":
            pts.append(comp.point_at(s))
        else:
            axis = 0 if comp.kind == "vertical_line" else 1
            free = sc.add(y[1 - axis], s)
            p = [None, None]
            p[axis] = comp.parametrization
            p[1 - axis] = free
            pts.append(tuple(p))
    return pts


def verify_candidate(f: PolyMap, c, ctx: Context | None = None, seed: int = 0,
                     tol: Tolerances = DEFAULT) -> str:
    """``attained``, ``missing_isolated`` or ``missing_nonisolated``."""
    y = c.point if isinstance(c, Candidate) else tuple(c)
    if not _fiber_empty(f, y, tol):
        return "attained"
    ctx = _ctx(f, ctx, seed, tol)
    rng = random.Random(f"isolation-{seed}-{sc.to_text(y[0])}-{sc.to_text(y[1])}")
    for comp in ctx.components:
        if not comp.contains(y, tol):
            continue
        samples = _samples(comp, y, rng)
        if all(_fiber_empty(f, p, tol) for p in samples):
            return "missing_nonisolated"
    return "missing_isolated"


# ---------------------------------------------------------------------------
# report


def bounds_table(d1: int, d2: int, mu: int) -> dict:
    """Upper bounds for the whole missing set and for its three regions."""
    big = max(d1, d2)
    if mu is not None and mu >= 2:
        f11 = Fraction(d1 * d2, mu * (mu - 1)) + 2 * (d1 + d2)
        p25a = Fraction(3 * d1 * d2, 4 * mu * (mu - 1))
    else:
        f11 = p25a = None
    return {"six_deg": 6 * big, "formula_11": f11, "prop22": d1 + d2,
            "prop24": d1 + d2, "prop25a": p25a, "prop25b": 2 * big}


@dataclass
class MissingReport:
    verified: list = field(default_factory=list)     # (point, tier)
    rejected: list = field(default_factory=list)     # (Candidate, reason)
    regions: dict = field(default_factory=dict)      # region -> list of points
    bounds: dict = field(default_factory=dict)
    satisfied: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    generic: bool = False
    mu: int | None = None

    @property
    def points(self):
        return [p for p, _ in self.verified]


def _snap_value(z, tol):
    if sc.is_exact(z):
        return z
    q = rationalize(z, 10 ** 6)
    if abs(sc.to_mp(z) - q.to_mpc()) < tol.dedup_radius * max(1, abs(sc.to_mp(z))):
        return q
    return z


def snap(c: Candidate, ctx: Context, tol) -> Candidate:
    """Replace a numeric candidate by a nearby Gaussian rational point when
    that point still lies on one of the components it came from."""
    if c.exact:
        return c
    p = (_snap_value(c.point[0], tol), _snap_value(c.point[1], tol))
    if not (sc.is_exact(p[0]) and sc.is_exact(p[1])):
        return c
    if any(comp.contains(p, tol) for comp in ctx.components) or any(
            sc.points_close(p, k.point, tol.dedup_radius) for k in ctx.kpoints):
        return Candidate(p, c.source, list(c.face_data))
    return c


def _dedupe(cands, tol):
    out = []
    for c in cands:
        for o in out:
            if sc.points_close(c.point, o.point, tol.dedup_radius):
                for fd in c.face_data:
                    if fd not in o.face_data:
                        o.face_data.append(fd)
                if c.source not in o.source.split("+"):
                    o.source += "+" + c.source
                break
        else:
            out.append(Candidate(c.point, c.source, list(c.face_data)))
    return out


def _region(y, ctx: Context, tol) -> str:
    if any(sc.points_close(y, k.point, tol.dedup_radius) for k in ctx.kpoints):
        return "K"
    center = ctx.center
    if sc.close(y[0], center[0], tol.dedup_radius) or sc.close(y[1], center[1], tol.dedup_radius):
        return "cross"
    return "open"


def missing_points(f: PolyMap, seed: int = 0, tol: Tolerances = DEFAULT,
                   ctx: Context | None = None, mu: int | None = None) -> MissingReport:
    ctx = _ctx(f, ctx, seed, tol)
    report = MissingReport(generic=ctx.norm.verdict.passed)
    cands = []
    for gen in (node_candidates, cross_candidates, cusp_candidates, intersection_candidates):
        try:
            cands.extend(gen(f, ctx, seed, tol))
        except (PositiveDimensional, NumericInconclusive) as exc:
            ctx.notes.append((None, f"{gen.__name__}: {exc}"))
    cands = _dedupe([snap(c, ctx, tol) for c in cands], tol)
    cands.sort(key=lambda c: sc.point_sort_key(c.point))
    report.candidates = cands
    regions = {"K": [], "cross": [], "open": []}
    for c in cands:
        try:
            verdict = verify_candidate(f, c, ctx, seed, tol)
        except NumericInconclusive as exc:
            report.inconclusive.append((c, str(exc)))
            continue
        if verdict == "missing_isolated":
            tier = "exact" if c.exact else "numeric"
            report.verified.append((c.point, tier))
            regions[_region(c.point, ctx, tol)].append(c.point)
        else:
            report.rejected.append((c, verdict))
    report.regions = regions
    if mu is None:
        try:
            mu = topological_degree(f, seed)[0]
        except (ValueError, NumericInconclusive):
            mu = None
    report.mu = mu
    d1, d2 = f.degrees
    b = bounds_table(d1, d2, mu)
    report.bounds = b
    n_all = len(report.verified)
    checks = {
        "six_deg": n_all <= b["six_deg"],
        "formula_11": None if b["formula_11"] is None else n_all <= b["formula_11"],
        "prop22": len(regions["K"]) <= b["prop22"],
        "prop24": len(regions["cross"]) <= b["prop24"],
        "prop25a": None if b["prop25a"] is None else len(regions["open"]) <= b["prop25a"],
        "prop25b": len(regions["open"]) <= b["prop25b"],
    }
    report.satisfied = checks
    return report
