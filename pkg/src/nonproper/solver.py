"""Roots, resultants and solution counts for square bivariate systems.

Everything that decides a count or an emptiness verdict is exact: the
eliminant is computed by exact evaluation/interpolation and the counts
are read off its degree and gcds.  Floating point (mpmath) only enters
when roots have to be located.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
import mpmath

from . import univariate as up
from .config import DEFAULT, Tolerances
from .lattice import Support, SupportPair, enumerate_face_pairs, mixed_volume
from .polyring import GaussRat, Poly, PolyMap, as_gauss
from .toric import apply_transform, build_transform

__all__ = [
    "RootCluster", "SolutionSet", "PositiveDimensional", "NumericInconclusive",
    "univariate_roots", "resultant", "solve_system", "count_torus_solutions",
    "count_all_solutions", "bernstein_deficiency", "fiber_is_empty",
    "fiber_is_empty_numeric", "shear_parameter", "rationalize", "bernstein_identity",
]

# shear parameters tried in order; small integers keep coefficients small
_SHEARS = (0, 1, -1, 2, -2, 3, -3, 5, -5, 7, 11, 13)


class PositiveDimensional(ValueError):
    """The system has a common curve component."""


class NumericInconclusive(RuntimeError):
    """Floating point evidence was not strong enough for a verdict."""


@dataclass
class RootCluster:
    value: mpmath.mpc
    multiplicity: int
    certified: bool = True
    exact: GaussRat | None = None

    def __repr__(self):
        v = self.exact if self.exact is not None else mpmath.nstr(self.value, 12)
        return f"RootCluster({v}, x{self.multiplicity})"


@dataclass
class SolutionSet:
    solutions: list = field(default_factory=list)   # ((u, v), multiplicity)
    count_all: int = 0
    count_torus: int = 0
    positive_dimensional: bool = False


# --------------------------------------------------------------------------
# univariate roots

def _mp_from_fraction(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def rationalize(z, max_den: int = 10 ** 9) -> GaussRat:
    """Nearest Gaussian rational with bounded denominators."""
    re = Fraction(mpmath.nstr(mpmath.re(z), 60, min_fixed=-mpmath.inf, max_fixed=mpmath.inf))
    im = Fraction(mpmath.nstr(mpmath.im(z), 60, min_fixed=-mpmath.inf, max_fixed=mpmath.inf))
    return GaussRat(re.limit_denominator(max_den), im.limit_denominator(max_den))


def _aberth(coeffs, tol: Tolerances):
    """Roots of a squarefree polynomial given by mpc coefficients."""
    n = len(coeffs) - 1
    lead = coeffs[-1]
    mon = [c / lead for c in coeffs]
    dmon = [k * c for k, c in enumerate(mon)][1:]
    radius = 1 + max(abs(c) for c in mon[:-1])
    # start on a circle scaled to the root magnitudes
    scale = mpmath.mpf(abs(mon[0])) ** (mpmath.mpf(1) / n) if mon[0] else mpmath.mpf(1)
    scale = min(scale, radius)
    z = [scale * mpmath.expj(2 * mpmath.pi * k / n + 0.4) for k in range(n)]
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec + 8)

    def peval(p, x):
        acc = mpmath.mpc(0)
        for c in reversed(p):
            acc = acc * x + c
        return acc

    for _ in range(tol.max_iterations):
        biggest = mpmath.mpf(0)
        for k in range(n):
            pk = peval(mon, z[k])
            dk = peval(dmon, z[k])
            if pk == 0:
                continue
            ratio = pk / dk if dk != 0 else mpmath.mpc(eps, eps)
            s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[k] != z[j])
            step = ratio / (1 - ratio * s)
            z[k] -= step
            biggest = max(biggest, abs(step) / max(1, abs(z[k])))
        if biggest < eps:
            break
    else:
        raise NumericInconclusive("root iteration did not converge")
    # residual check relative to coefficient size
    for x in z:
        scale_x = sum(abs(c) * abs(x) ** k for k, c in enumerate(mon))
        if abs(peval(mon, x)) > tol.root_residual * max(1, scale_x) * 1e6:
            raise NumericInconclusive("root residual too large")
    return z


def _factor_roots(factor, tol: Tolerances):
    """Roots of a monic squarefree exact polynomial; exact where the root is
    a Gaussian rational."""
    deg = len(factor) - 1
    if deg == 1:
        r = -factor[0] / factor[1]
        return [(r.to_mpc(), r)]
    prec = tol.precision_bits
    while True:
        with mpmath.workprec(prec):
            try:
                zs = _aberth([c.to_mpc() for c in factor], tol)
                break
            except (NumericInconclusive, ZeroDivisionError):
                if prec >= tol.max_precision_bits:
                    raise NumericInconclusive("root finding failed at maximum precision")
                prec *= 2
    out = []
    for z in zs:
        q = rationalize(z)
        exact = q if not up.evaluate(factor, q) else None
        out.append((z if exact is None else exact.to_mpc(), exact))
    return out


def univariate_roots(p, tol: Tolerances = DEFAULT):
    """Roots with multiplicity of an exact univariate polynomial (list of
    coefficients, lowest first, or a :class:`Poly` in one variable)."""
    if isinstance(p, Poly):
        if p.degree_in(1) <= 0:
            p = p.specialize(1, 0)
        else:
            p = p.specialize(0, 0)
    p = up.make(p)
    if len(p) <= 1:
        return []
    clusters = []
    for factor, mult in up.squarefree_decomposition(p):
        for value, exact in _factor_roots(factor, tol):
            clusters.append(RootCluster(value, mult, True, exact))
    # merge numerically indistinguishable roots (coprime factors make this
    # a safety net only)
    merged = []
    for c in clusters:
        for m in merged:
            if m.exact is None and c.exact is None and abs(m.value - c.value) < tol.cluster_radius:
                m.multiplicity += c.multiplicity
                m.certified = False
                break
        else:
            merged.append(c)
    merged.sort(key=lambda c: (float(mpmath.re(c.value)), float(mpmath.im(c.value))))
    return merged


# --------------------------------------------------------------------------
# resultants

def _degree_bound(p: Poly, q: Poly, var: int) -> int:
    other = 1 - var
    m, n = p.degree_in(var), q.degree_in(var)
    b = m * max(q.degree_in(other), 0) + n * max(p.degree_in(other), 0)
    return min(b, p.degree * q.degree)


def resultant(p: Poly, q: Poly, eliminate: int = 1):
    """Resultant eliminating variable ``eliminate`` (0 for ``u``, 1 for
    ``v``); returns a coefficient list in the remaining variable.  Formal
    degrees are the degrees of ``p, q`` in the eliminated variable."""
    if p.is_zero() or q.is_zero():
        return []
    m, n = p.degree_in(eliminate), q.degree_in(eliminate)
    if m == 0 and n == 0:
        raise ValueError("both polynomials are free of the eliminated variable")
    other = 1 - eliminate
    bound = _degree_bound(p, q, eliminate)
    xs, ys = [], []
    for k in range(bound + 1):
        x = GaussRat(k)
        a = p.specialize(other, x)
        b = q.specialize(other, x)
        xs.append(x)
        ys.append(up.resultant(a, b, m, n))
    return up.interpolate(xs, ys)


def _top_form_nonzero(p: Poly, lam) -> bool:
    d = p.degree
    val = GaussRat(0)
    lam = as_gauss(lam)
    for (i, j), c in p.terms.items():
        if i + j == d:
            val = val + c * (-lam) ** i
    return bool(val)


def shear_parameter(polys, skip: int = 0):
    """The ``skip``-th small integer ``lam`` for which ``p(x - lam v, v)``
    has a constant leading coefficient in ``v`` for every ``p``."""
    seen = 0
    for lam in _SHEARS:
        if all(_top_form_nonzero(p, lam) for p in polys):
            if seen == skip:
                return lam
            seen += 1
    raise ValueError("no admissible shear found")


def _eliminant(p: Poly, q: Poly, lam):
    P, Q = p.shear(lam), q.shear(lam)
    if P.degree_in(1) == 0 and Q.degree_in(1) == 0:
        # both free of v: solutions are common roots in x times a line
        g = up.gcd(P.specialize(1, 0), Q.specialize(1, 0))
        if len(g) > 1:
            raise PositiveDimensional("common vertical component")
        return [GaussRat(1)]
    return resultant(P, Q, eliminate=1)


def _trivial(p: Poly, q: Poly):
    """Handle zero/constant inputs: returns None when the generic path
    applies, else the exact solution count (possibly infinite)."""
    if (p.is_constant() and not p.is_zero()) or (q.is_constant() and not q.is_zero()):
        return 0
    if p.is_zero() or q.is_zero():
        raise PositiveDimensional("zero polynomial in the system")
    return None


def count_all_solutions(p: Poly, q: Poly) -> int:
    """Number of solutions in C^2 with multiplicity."""
    t = _trivial(p, q)
    if t is not None:
        return t
    lam = shear_parameter((p, q))
    r = _eliminant(p, q, lam)
    if not r:
        raise PositiveDimensional("eliminant vanishes identically")
    return len(r) - 1


def fiber_is_empty(p: Poly, q: Poly) -> bool:
    """Exact emptiness of ``p = q = 0`` in C^2."""
    try:
        return count_all_solutions(p, q) == 0
    except PositiveDimensional:
        return False


def _axis_polynomial(p: Poly, q: Poly, lam):
    """Squarefree polynomial in ``x = u + lam v`` vanishing at the images
    of all common zeros on the coordinate axes."""
    a = up.gcd(p.specialize(1, 0), q.specialize(1, 0))          # v = 0, x = u
    b = up.gcd(p.specialize(0, 0), q.specialize(0, 0))          # u = 0, x = lam v
    h = a if a else [GaussRat(1)]
    if len(b) > 1:
        if lam == 0:
            h = up.mul(h, [GaussRat(0), GaussRat(1)])
        else:
            h = up.mul(h, up.compose_linear(b, GaussRat(1) / as_gauss(lam), GaussRat(0)))
    return up.squarefree_part(h)


def count_torus_solutions(p: Poly, q: Poly, shears: int = 2) -> int:
    """Number of solutions in (C*)^2 with multiplicity."""
    p, q = p.strip_monomial(), q.strip_monomial()
    t = _trivial(p, q)
    if t is not None:
        return t
    best = None
    for k in range(shears):
        lam = shear_parameter((p, q), skip=k)
        r = _eliminant(p, q, lam)
        if not r:
            raise PositiveDimensional("eliminant vanishes identically")
        h = _axis_polynomial(p, q, lam)
        count = len(r) - 1 - (up.part_degree(r, h) if len(h) > 1 else 0)
        best = count if best is None else max(best, count)
    return best


def solve_system(p: Poly, q: Poly, tol: Tolerances = DEFAULT) -> SolutionSet:
    """Solutions of ``p = q = 0`` with multiplicities."""
    try:
        t = _trivial(p, q)
    except PositiveDimensional:
        return SolutionSet(positive_dimensional=True)
    if t is not None:
        return SolutionSet()
    lam = shear_parameter((p, q))
    try:
        r = _eliminant(p, q, lam)
    except PositiveDimensional:
        return SolutionSet(positive_dimensional=True)
    if not r:
        return SolutionSet(positive_dimensional=True)
    P, Q = p.shear(lam), q.shear(lam)
    sols = []
    for root in univariate_roots(r, tol):
        for (v, share) in _fiber_over(P, Q, root, tol):
            if root.exact is not None and isinstance(v, GaussRat):
                u = root.exact - as_gauss(lam) * v
            else:
                vv = v.to_mpc() if isinstance(v, GaussRat) else v
                u = root.value - lam * vv
            sols.append(((u, v), share))
    try:
        torus = count_torus_solutions(p, q)
    except PositiveDimensional:
        torus = 0
    return SolutionSet(sols, len(r) - 1, torus, False)


def _fiber_over(P: Poly, Q: Poly, root: RootCluster, tol: Tolerances):
    """``v`` values completing a root ``x`` of the eliminant, each with a
    share of the root's multiplicity."""
    if root.exact is not None:
        g = up.gcd(P.specialize(0, root.exact), Q.specialize(0, root.exact))
        vs = univariate_roots(g, tol) if len(g) > 1 else []
        vals = [c.exact if c.exact is not None else c.value for c in vs]
        weights = [c.multiplicity for c in vs]
    else:
        with mpmath.workprec(tol.precision_bits):
            x = root.value
            pc = _numeric_specialize(P, x)
            qc = _numeric_specialize(Q, x)
            base = pc if len(pc) >= 2 else qc
            other = qc if base is pc else pc
            cand = _numeric_roots(base, tol)
            vals = [v for v in cand if abs(_peval(other, v)) < tol.backsub_residual * max(1, _pnorm(other, v))]
            weights = [1] * len(vals)
    if not vals:
        return []
    total = sum(weights)
    if len(vals) == 1:
        return [(vals[0], root.multiplicity)]
    return [(v, Fraction(root.multiplicity * w, total)) for v, w in zip(vals, weights)]


# --------------------------------------------------------------------------
# numeric tier

def _numeric_specialize(P: Poly, x, extra=None):
    """Coefficients in ``v`` of ``P(x, v)`` as mpc values."""
    n = P.degree_in(1)
    out = [mpmath.mpc(0)] * (n + 1)
    for (i, j), c in P.terms.items():
        out[j] += c.to_mpc() * x ** i
    return out


def _peval(coeffs, x):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _pnorm(coeffs, x):
    return sum(abs(c) * abs(x) ** k for k, c in enumerate(coeffs))


def _trim_numeric(coeffs, rel):
    big = max((abs(c) for c in coeffs), default=0)
    out = list(coeffs)
    while out and abs(out[-1]) <= rel * big:
        out.pop()
    return out


def _numeric_roots(coeffs, tol: Tolerances):
    c = _trim_numeric(coeffs, tol.coeff_trim)
    if len(c) <= 1:
        return []
    return list(mpmath.polyroots(list(reversed(c)), maxsteps=tol.max_iterations, extraprec=tol.precision_bits, error=False))


def _gq(c: GaussRat):
    return gmpy2.mpc(gmpy2.mpfr(gmpy2.mpq(c.re.numerator, c.re.denominator)),
                     gmpy2.mpfr(gmpy2.mpq(c.im.numerator, c.im.denominator)))


def _to_gmpy(x):
    if isinstance(x, GaussRat):
        return _gq(x)
    x = mpmath.mpc(x)
    return gmpy2.mpc(gmpy2.mpfr(mpmath.nstr(x.real, 60)), gmpy2.mpfr(mpmath.nstr(x.imag, 60)))


def _to_mpmath(z):
    return mpmath.mpc(mpmath.mpf(str(z.real)), mpmath.mpf(str(z.imag)))


def _det(rows):
    """Determinant by Gaussian elimination with partial pivoting."""
    a = [list(r) for r in rows]
    n = len(a)
    det = gmpy2.mpc(1)
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0:
            return gmpy2.mpc(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        piv = a[k][k]
        det *= piv
        row_k = a[k]
        for i in range(k + 1, n):
            factor = a[i][k] / piv
            if factor == 0:
                continue
            row_i = a[i]
            for j in range(k + 1, n):
                row_i[j] -= factor * row_k[j]
    return det


def _sylvester_det(a, b):
    m, n = len(a) - 1, len(b) - 1
    if m + n == 0:
        return gmpy2.mpc(1)
    zero = gmpy2.mpc(0)
    rows = []
    ra, rb = list(reversed(a)), list(reversed(b))
    for k in range(n):
        rows.append([zero] * k + ra + [zero] * (n - 1 - k))
    for k in range(m):
        rows.append([zero] * k + rb + [zero] * (m - 1 - k))
    return _det(rows)


def _gspec(terms, x, n):
    out = [gmpy2.mpc(0)] * (n + 1)
    for (i, j), c in terms:
        out[j] += c * x ** i
    return out


def fiber_is_empty_numeric(f1: Poly, f2: Poly, y, tol: Tolerances = DEFAULT) -> bool:
    """Emptiness of ``f1 - y1 = f2 - y2 = 0`` for an inexact target ``y``.

    The exact polynomials are sheared exactly; only the target enters in
    floating point.  The eliminant is recovered by sampling on the unit
    circle and a discrete Fourier transform, relatively tiny leading
    coefficients are cut, and every remaining root is tested by back
    substitution."""
    lam = shear_parameter((f1, f2))
    P, Q = f1.shear(lam), f2.shear(lam)
    m, n = P.degree_in(1), Q.degree_in(1)
    if m == 0 and n == 0:
        return True
    with gmpy2.context(gmpy2.get_context(), precision=tol.precision_bits):
        y1, y2 = _to_gmpy(y[0]), _to_gmpy(y[1])
        pt = [(e, _gq(c)) for e, c in P.terms.items()]
        qt = [(e, _gq(c)) for e, c in Q.terms.items()]
        N = _degree_bound(P, Q, 1) + 1
        two_pi_i = gmpy2.mpc(0, 2) * gmpy2.const_pi()
        nodes = [gmpy2.exp(two_pi_i * k / N) for k in range(N)]
        vals = []
        for x in nodes:
            a = _gspec(pt, x, m)
            b = _gspec(qt, x, n)
            a[0] -= y1
            b[0] -= y2
            vals.append(_sylvester_det(a, b))
        coeffs = []
        for j in range(N):
            acc = gmpy2.mpc(0)
            for k in range(N):
                acc += vals[k] * nodes[(-j * k) % N]
            coeffs.append(acc / N)
        big = max(abs(c) for c in coeffs)
        cut = big * tol.coeff_trim * 1e6
        while coeffs and abs(coeffs[-1]) <= cut:
            coeffs.pop()
        if not coeffs:
            raise NumericInconclusive("eliminant numerically zero")
        if len(coeffs) == 1:
            return True
        mp_coeffs = [_to_mpmath(c) for c in coeffs]
        y1m, y2m = _to_mpmath(y1), _to_mpmath(y2)
    with mpmath.workprec(tol.precision_bits):
        for x in _numeric_roots(mp_coeffs, tol):
            a = _numeric_specialize(P, x)
            b = _numeric_specialize(Q, x)
            a[0] -= y1m
            b[0] -= y2m
            base, other = (a, b) if len(_trim_numeric(a, tol.coeff_trim)) >= 2 else (b, a)
            if len(_trim_numeric(base, tol.coeff_trim)) < 2:
                if abs(base[0]) < tol.backsub_residual:
                    return False
                continue
            for v in _numeric_roots(base, tol):
                if abs(_peval(other, v)) < tol.backsub_residual * max(1, _pnorm(other, v)):
                    return False
        return True


# --------------------------------------------------------------------------
# Bernstein deficiency

def _face_multiplicity(g1: Poly, g2: Poly, shears: int = 2):
    """Intersection number of ``g1 = g2 = 0`` along ``C* x {0}``."""
    g1, g2 = g1.strip_monomial(), g2.strip_monomial()
    h = up.gcd(g1.specialize(1, 0), g2.specialize(1, 0))
    h, _ = up.strip_x(h)
    if len(h) <= 1:
        return 0
    h = up.squarefree_part(h)
    best = None
    for k in range(shears):
        lam = shear_parameter((g1, g2), skip=k)
        r = _eliminant(g1, g2, lam)
        if not r:
            raise PositiveDimensional("degenerate face")
        m = up.part_degree(r, h)
        best = m if best is None else min(best, m)
    return best


def bernstein_deficiency(p, q=None, y=None):
    """Per-face counts ``m_Gamma`` of solutions of the transformed system in
    ``C* x {0}``, for every edge face of the supports of ``(p, q)``.

    Accepts either two polynomials, or a :class:`PolyMap` and a target
    ``y`` (the system ``f - y``)."""
    if isinstance(p, PolyMap):
        f = p
        y = q if y is None else y
        y = y if y is not None else (0, 0)
        p, q = f.f1 - as_gauss(y[0]), f.f2 - as_gauss(y[1])
    pair = SupportPair(Support(p.support), Support(q.support))
    out = []
    for g in enumerate_face_pairs(pair):
        if g.dim != 1:
            continue
        t = build_transform(pair, g)
        c = apply_transform((p, q), t)
        out.append((g, _face_multiplicity(c.p1, c.p2)))
    return out


def bernstein_identity(p: Poly, q: Poly):
    """``(torus count, sum of deficiencies, mixed volume)``."""
    V = mixed_volume(Support(p.support), Support(q.support))
    torus = count_torus_solutions(p, q)
    defect = sum(m for _, m in bernstein_deficiency(p, q))
    return torus, defect, V
