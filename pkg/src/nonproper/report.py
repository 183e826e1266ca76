"""JSON reports.

Exact rationals are written as ``"num/den"`` strings (``"3"`` for integers),
complex values as ``{"re": ..., "im": ...}`` with the parts written the same
way, and inexact values as decimal strings.  Keys are sorted so that equal
analyses give byte-identical output.
"""
from __future__ import annotations

import json
from fractions import Fraction

import mpmath

from . import scalars as sc
from .analysis import genericity_check, topological_degree
from .config import DEFAULT, Tolerances
from .faceclass import classify_face
from .lattice import enumerate_face_pairs, is_independent, mixed_volume
from .missing import prepare, missing_points
from .polyring import GaussRat, Poly, PolyMap, support_pair
from .solver import NumericInconclusive

SCHEMA_VERSION = 1

__all__ = ["SCHEMA_VERSION", "rational", "scalar", "point", "poly_terms", "supports_json",
           "faces_json", "components_json", "missing_json", "analyze", "dumps"]


def rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar(x, digits: int = 30):
    if isinstance(x, (int, Fraction)):
        x = GaussRat(Fraction(x))
    if isinstance(x, GaussRat):
        if not x.im:
            return rational(x.re)
        return {"re": rational(x.re), "im": rational(x.im)}
    z = sc.to_mp(x)
    return {"re": mpmath.nstr(mpmath.re(z), digits), "im": mpmath.nstr(mpmath.im(z), digits)}


def point(p) -> dict:
    return {"s": scalar(p[0]), "t": scalar(p[1])}


def poly_terms(p: Poly) -> list:
    return [[[i, j], scalar(c)] for (i, j), c in sorted(p.terms.items())]


def _pts(s) -> list:
    return [list(p) for p in sorted(s)]


def supports_json(f: PolyMap) -> dict:
    pair = support_pair(f, augment=True)
    return {"A1": _pts(pair.a1.points), "A2": _pts(pair.a2.points)}


def faces_json(f: PolyMap) -> list:
    pair = support_pair(f, augment=True)
    out = []
    for g in enumerate_face_pairs(pair):
        row = {"normal": list(g.normal), "dim": g.dim,
               "gamma1": _pts(g.g1.points), "gamma2": _pts(g.g2.points)}
        row.update(classify_face(g).flags())
        out.append(row)
    return out


def components_json(comps) -> list:
    out = []
    for c in comps:
        row = {"kind": c.kind, "face_normal": list(c.face.normal), "equation": c.describe()}
        row["implicit"] = poly_terms(c.implicit) if c.implicit is not None else None
        if c.kind == "rational_curve":
            g1, g2 = c.parametrization
            row["parametrization"] = {"s": [scalar(a) for a in g1], "t": [scalar(a) for a in g2]}
        else:
            row["parametrization"] = scalar(c.parametrization)
        out.append(row)
    return out


def missing_json(rep) -> dict:
    def bound(b):
        return None if b is None else rational(b)

    return {
        "verified": [dict(point(p), tier=tier) for p, tier in rep.verified],
        "rejected": [dict(point(c.point), reason=why, source=c.source) for c, why in rep.rejected],
        "inconclusive": [dict(point(c.point), reason=why) for c, why in rep.inconclusive],
        "regions": {k: [point(p) for p in v] for k, v in rep.regions.items()},
        "bounds": {k: bound(v) for k, v in rep.bounds.items()},
        "bounds_satisfied": rep.satisfied,
        "count": len(rep.verified),
    }


def analyze(f: PolyMap, seed: int = 0, tol: Tolerances = DEFAULT) -> dict:
    """Full report for one map."""
    pair = support_pair(f, augment=True)
    d1, d2 = f.degrees
    out = {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "precision_bits": tol.precision_bits,
        "map": {"f1": str(f.f1), "f2": str(f.f2)},
        "degree": max(d1, d2),
        "degrees": [d1, d2],
        "supports": supports_json(f),
        "independent": is_independent(pair),
        "mixed_volume": rational(mixed_volume(pair.a1, pair.a2)),
        "faces": faces_json(f),
        "notes": [],
    }
    verdict = genericity_check(f, seed)
    out["genericity"] = verdict.to_dict()
    try:
        mu = topological_degree(f, seed)[0]
    except (ValueError, NumericInconclusive) as exc:
        mu = None
        out["notes"].append(f"topological degree: {exc}")
    out["mu"] = mu
    if not verdict.dominant or not verdict.independent:
        out.update(jelonek=[], kf_points=[], missing=None)
        return out
    ctx = prepare(f, seed, tol, verdict)
    out["jelonek"] = components_json(ctx.components)
    out["kf_points"] = [dict(point(k.point), face_normal=list(k.face.normal)) for k in ctx.kpoints]
    rep = missing_points(f, seed, tol, ctx, mu)
    out["missing"] = missing_json(rep)
    out["notes"].extend(msg if face is None else f"face {list(face.normal)}: {msg}"
                        for face, msg in ctx.notes)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
