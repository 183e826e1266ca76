"""Command line interface.

Exit codes: 0 success, 1 parse or usage error, 2 degenerate map (not
dominant or dependent support), 3 genericity failed under
``--require-generic``, 4 numerically inconclusive.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import report as rp
from . import scalars as sc
from .analysis import genericity_check, is_dominant, jelonek_set, normalize
from .config import DEFAULT
from .families import fixture, make_lemma23, make_thm14
from .lattice import is_independent, mixed_volume
from .mapfile import ParseError, format_map, parse_coefficient, parse_map
from .missing import missing_points, prepare, verify_candidate
from .polyring import GaussRat, support_pair
from .solver import NumericInconclusive

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_NOT_GENERIC, EXIT_INCONCLUSIVE = range(5)


class UsageError(Exception):
    pass


class Degenerate(Exception):
    pass


def _tolerances(args):
    tol = DEFAULT.with_overrides(precision_bits=args.precision)
    for item in args.tolerance or ():
        name, eq, value = item.partition("=")
        if not eq:
            name, value = "backsub_residual", item
        if name not in DEFAULT.__dataclass_fields__:
            raise UsageError(f"unknown tolerance {name!r}")
        try:
            tol = tol.with_overrides(**{name: type(getattr(DEFAULT, name))(float(value))})
        except ValueError:
            raise UsageError(f"bad tolerance value {value!r}") from None
    if tol.max_precision_bits < tol.precision_bits:
        tol = tol.with_overrides(max_precision_bits=tol.precision_bits)
    return tol


def _read_map(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_map(text)


def _require_sane(f):
    if not is_dominant(f):
        raise Degenerate("map is not dominant (Jacobian determinant vanishes)")
    if not is_independent(support_pair(f, augment=True)):
        raise Degenerate("dependent support pair")


def _require_generic(args, verdict):
    if args.require_generic and not verdict.passed:
        msg = f"genericity verdict: {verdict.verdict}"
        if verdict.reason:
            msg += f" ({verdict.reason})"
        raise _NotGeneric(msg)


class _NotGeneric(Exception):
    pass


def _emit(args, payload, text):
    out = rp.dumps(payload) if args.json else text.rstrip("\n") + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _pt(p):
    return f"({sc.to_text(p[0])}, {sc.to_text(p[1])})"


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args):
    f = _read_map(args.file)
    tol = _tolerances(args)
    _require_sane(f)
    verdict = genericity_check(f, args.seed)
    _require_generic(args, verdict)
    payload = rp.analyze(f, args.seed, tol)
    lines = [f"degree: {payload['degree']}", f"mixed volume: {payload['mixed_volume']}",
             f"mu: {payload['mu']}", f"genericity: {verdict.verdict}"]
    lines += ["jelonek set:"] + [f"  {c['equation']}" for c in payload["jelonek"]]
    lines.append("K_f: " + ", ".join(f"({k['s']}, {k['t']})" for k in payload["kf_points"]))
    miss = payload["missing"]
    lines.append("missing points: " + ", ".join(f"({m['s']}, {m['t']}) [{m['tier']}]"
                                                for m in miss["verified"]))
    for k, v in miss["bounds"].items():
        lines.append(f"  bound {k}: {v} satisfied={miss['bounds_satisfied'][k]}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_faces(args):
    f = _read_map(args.file)
    faces = rp.faces_json(f)
    lines = []
    for row in faces:
        flags = [k for k in ("origin", "half_origin", "coordinate", "relevant", "long") if row[k]]
        lines.append(f"normal {tuple(row['normal'])} dim {row['dim']}: "
                     f"{row['gamma1']} | {row['gamma2']}  {' '.join(flags)}")
    _emit(args, {"schema_version": rp.SCHEMA_VERSION, "faces": faces}, "\n".join(lines))
    return EXIT_OK


def cmd_mixed_volume(args):
    f = _read_map(args.file)
    pair = support_pair(f, augment=True)
    v = rp.rational(mixed_volume(pair.a1, pair.a2))
    _emit(args, {"schema_version": rp.SCHEMA_VERSION, "mixed_volume": v}, v)
    return EXIT_OK


def cmd_jelonek(args):
    f = _read_map(args.file)
    tol = _tolerances(args)
    _require_sane(f)
    verdict = genericity_check(f, args.seed)
    _require_generic(args, verdict)
    comps = jelonek_set(f, norm=normalize(f, args.seed, verdict), tol=tol)
    payload = {"schema_version": rp.SCHEMA_VERSION, "jelonek": rp.components_json(comps)}
    _emit(args, payload, "\n".join(c.describe() for c in comps) or "(empty)")
    return EXIT_OK


def cmd_missing(args):
    f = _read_map(args.file)
    tol = _tolerances(args)
    _require_sane(f)
    verdict = genericity_check(f, args.seed)
    _require_generic(args, verdict)
    ctx = prepare(f, args.seed, tol, verdict)
    rep = missing_points(f, args.seed, tol, ctx)
    payload = {"schema_version": rp.SCHEMA_VERSION, "mu": rep.mu, "missing": rp.missing_json(rep)}
    text = "\n".join(f"{_pt(p)} {tier}" for p, tier in rep.verified) or "(none)"
    _emit(args, payload, text)
    return EXIT_OK


def _parse_point(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected a point 's,t', got {text!r}")
    try:
        return tuple(parse_coefficient(p.strip()) for p in parts)
    except ParseError as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None


def cmd_verify(args):
    f = _read_map(args.file)
    tol = _tolerances(args)
    y = _parse_point(args.point)
    _require_sane(f)
    verdict = genericity_check(f, args.seed)
    _require_generic(args, verdict)
    result = verify_candidate(f, y, None, args.seed, tol)
    payload = {"schema_version": rp.SCHEMA_VERSION, "point": rp.point(y), "result": result}
    _emit(args, payload, result)
    return EXIT_OK


def _roots(text):
    if text is None:
        return None
    return [parse_coefficient(r.strip()) for r in text.split(",") if r.strip()]


def _random_roots(rng, n, avoid):
    out = []
    while len(out) < n:
        r = GaussRat(Fraction(rng.choice((1, -1)) * rng.randint(1, 9), rng.randint(1, 3)))
        if r not in out and r not in avoid:
            out.append(r)
    return out


def cmd_generate(args):
    rng = random.Random(f"generate-{args.seed}")
    if args.family == "thm14":
        n = args.n or 1
        p = _roots(args.p_roots) or _random_roots(rng, n, [])
        q = _roots(args.q_roots) or _random_roots(rng, n, p)
        f = make_thm14(n, p, q)
    elif args.family == "lemma23":
        k = args.k or 1
        coeffs = _roots(args.p_coeffs)
        if coeffs is None:
            coeffs = [GaussRat(rng.randint(1, 5))] + [GaussRat(rng.choice((1, -1)) * rng.randint(1, 5))
                                                     for _ in range(k)]
        f = make_lemma23(k, coeffs)
    else:
        if not args.id:
            raise UsageError("fixture needs --id")
        f = fixture(args.id)
    text = format_map(f)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for every randomized choice")
    common.add_argument("--precision", type=int, default=DEFAULT.precision_bits,
                        help="working precision in bits for the numeric tier")
    common.add_argument("--tolerance", action="append", metavar="[NAME=]VALUE",
                        help="override a numeric tolerance (bare value: back-substitution residual)")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--require-generic", action="store_true",
                        help="exit with status 3 unless the genericity verdict passes")

    parser = argparse.ArgumentParser(prog="nonproper",
                                     description="Missing points of non-proper polynomial maps of the plane.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, helptext in (
            ("analyze", cmd_analyze, "full report"),
            ("faces", cmd_faces, "face pairs and their classification"),
            ("mixed-volume", cmd_mixed_volume, "mixed volume of the supports"),
            ("jelonek", cmd_jelonek, "components of the Jelonek set"),
            ("missing", cmd_missing, "verified isolated missing points"),
            ("verify", cmd_verify, "classify one target point")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help="map file, or '-' for standard input")
        p.set_defaults(func=fn)
        if name == "verify":
            p.add_argument("--point", required=True, help="target point 's,t'")
    g = sub.add_parser("generate", parents=[common], help="write a map file for a family member")
    g.add_argument("family", choices=("thm14", "lemma23", "fixture"))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--id", help="fixture id: 1.2, 1.3 or 1.4")
    g.add_argument("--p-roots", help="comma separated roots of P (thm14)")
    g.add_argument("--q-roots", help="comma separated roots of Q (thm14)")
    g.add_argument("--p-coeffs", help="comma separated coefficients of P, lowest first (lemma23)")
    g.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Degenerate as exc:
        print(f"degenerate map: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except _NotGeneric as exc:
        print(f"not generic: {exc}", file=sys.stderr)
        return EXIT_NOT_GENERIC
    except NumericInconclusive as exc:
        print(f"numerically inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
