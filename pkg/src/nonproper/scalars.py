"""Scalars that are either exact (:class:`GaussRat`) or mpmath complex.

Exact values stay exact through every helper as long as all inputs are
exact; a single inexact input turns the result into an ``mpc``.
"""
from __future__ import annotations

import mpmath

from .polyring import GaussRat, as_gauss


def is_exact(x) -> bool:
    return isinstance(x, GaussRat)


def to_mp(x):
    if isinstance(x, GaussRat):
        return x.to_mpc()
    return mpmath.mpc(x)


def _lift(a, b):
    if isinstance(a, GaussRat) and isinstance(b, GaussRat):
        return a, b
    if isinstance(a, int) and isinstance(b, GaussRat):
        return as_gauss(a), b
    if isinstance(b, int) and isinstance(a, GaussRat):
        return a, as_gauss(b)
    return to_mp(a), to_mp(b)


def add(a, b):
    a, b = _lift(a, b)
    return a + b


def sub(a, b):
    a, b = _lift(a, b)
    return a - b


def mul(a, b):
    a, b = _lift(a, b)
    return a * b


def div(a, b):
    a, b = _lift(a, b)
    return a / b


def power(a, k: int):
    return a ** k


def is_zero(x, eps=1e-25) -> bool:
    if isinstance(x, GaussRat):
        return not x
    return abs(x) < eps


def ueval(coeffs, x):
    """Evaluate a coefficient list (lowest first) at ``x``."""
    if isinstance(x, GaussRat):
        acc = GaussRat(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc
    x = to_mp(x)
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + to_mp(c)
    return acc


def close(a, b, radius: float) -> bool:
    if isinstance(a, GaussRat) and isinstance(b, GaussRat):
        return a == b
    return abs(to_mp(a) - to_mp(b)) < radius


def points_close(p, q, radius: float) -> bool:
    return close(p[0], q[0], radius) and close(p[1], q[1], radius)


def sort_key(x):
    if isinstance(x, GaussRat):
        return (float(x.re), float(x.im))
    return (float(mpmath.re(x)), float(mpmath.im(x)))


def point_sort_key(p):
    return sort_key(p[0]) + sort_key(p[1])


def to_text(x, digits: int = 15) -> str:
    if isinstance(x, GaussRat):
        return str(x)
    x = to_mp(x)
    re, im = mpmath.nstr(mpmath.re(x), digits), mpmath.nstr(mpmath.im(x), digits)
    if abs(mpmath.im(x)) < mpmath.mpf(10) ** (-digits):
        return re
    return f"{re}{'+' if mpmath.im(x) >= 0 else ''}{im}i"
