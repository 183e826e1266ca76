"""Exact bivariate polynomials over the Gaussian rationals Q(i).

Variables are always ``u`` (index 0) and ``v`` (index 1); exponents are
pairs ``(i, j)`` meaning ``u**i * v**j``.  Values are immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from numbers import Rational

import mpmath
from gmpy2 import mpq

__all__ = [
    "GaussRat", "Poly", "PolyMap", "JacobianData",
    "support_pair", "restrict_to_face", "jacobian", "evaluate", "as_gauss",
]

_ZERO = mpq(0)


_MPQ = type(mpq(0))


class GaussRat:
    """Exact complex number ``re + im*i`` with rational parts (stored as
    gmpy2 ``mpq``, which compares and hashes like :class:`Fraction`)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is _MPQ else mpq(re)
        self.im = im if type(im) is _MPQ else mpq(im)

    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        """Parse ``"3/2"``, ``"-1/3i"`` or ``"1/2+3i"``."""
        from .mapfile import parse_coefficient
        return parse_coefficient(text)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussRat:
            other = as_gauss(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussRat:
            other = as_gauss(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_gauss(other) - self

    def __mul__(self, other):
        if type(other) is not GaussRat:
            other = as_gauss(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRat(a * c, _ZERO)
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussRat:
            other = as_gauss(other)
        c, d = other.re, other.im
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussRat(self.re / c, self.im / c)
        n = c * c + d * d
        a, b = self.re, self.im
        return GaussRat((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return as_gauss(other) / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return (GaussRat(1) / self) ** (-n)
        result, base = GaussRat(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    # comparisons --------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is not GaussRat:
            try:
                other = as_gauss(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    @property
    def is_real(self):
        return not self.im

    def to_mpc(self):
        return mpmath.mpc(mpmath.mpf(self.re.numerator) / self.re.denominator,
                          mpmath.mpf(self.im.numerator) / self.im.denominator)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        if not self.im:
            return _frac_str(self.re)
        if not self.re:
            return _frac_str(self.im) + "i"
        sign = "+" if self.im > 0 else "-"
        return f"{_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}i"


def _frac_str(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_gauss(x) -> GaussRat:
    if type(x) is GaussRat:
        return x
    if isinstance(x, (int, Rational)):
        return GaussRat(mpq(x))
    if isinstance(x, complex):
        return GaussRat(mpq(x.real), mpq(x.imag))
    if isinstance(x, str):
        return GaussRat.parse(x)
    raise TypeError(f"cannot convert {type(x).__name__} to GaussRat")


_ONE = GaussRat(1)


class Poly:
    """Sparse polynomial in ``u, v``; ``terms`` maps exponent pairs to
    non-zero :class:`GaussRat` coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = as_gauss(c)
                if c:
                    clean[(int(exp[0]), int(exp[1]))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, exp, c=1) -> "Poly":
        return cls({tuple(exp): c})

    @classmethod
    def u(cls):
        return cls({(1, 0): 1})

    @classmethod
    def v(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_univariate(cls, coeffs, var: int = 0) -> "Poly":
        """Lift a coefficient list (lowest degree first) into ``u`` or ``v``."""
        if var == 0:
            return cls({(k, 0): c for k, c in enumerate(coeffs)})
        return cls({(0, k): c for k, c in enumerate(coeffs)})

    # structure ----------------------------------------------------------
    @property
    def support(self) -> frozenset:
        return frozenset(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def coeff(self, exp) -> GaussRat:
        return self.terms.get(tuple(exp), GaussRat(0))

    def constant_term(self) -> GaussRat:
        return self.coeff((0, 0))

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def min_exponents(self):
        if not self.terms:
            return (0, 0)
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def strip_monomial(self) -> "Poly":
        """Divide out the largest monomial factor ``u**a * v**b``."""
        a, b = self.min_exponents()
        if not a and not b:
            return self
        return Poly._raw({(i - a, j - b): c for (i, j), c in self.terms.items()})

    def is_real(self) -> bool:
        return all(c.is_real for c in self.terms.values())

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_gauss(other)
            if not c:
                return Poly._raw({})
            return Poly._raw({e: k * c for e, k in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # calculus and substitution -------------------------------------------
    def diff(self, var: int) -> "Poly":
        out = {}
        for (i, j), c in self.terms.items():
            k = (i, j)[var]
            if k:
                out[(i - 1, j) if var == 0 else (i, j - 1)] = c * k
        return Poly._raw(out)

    def restrict(self, points) -> "Poly":
        pts = set(points)
        return Poly._raw({e: c for e, c in self.terms.items() if e in pts})

    def map_exponents(self, fn) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            s = out.get(e2)
            out[e2] = c if s is None else s + c
        return Poly._raw({e: c for e, c in out.items() if c})

    def shear(self, lam) -> "Poly":
        """Return ``p(u - lam*v, v)`` as a polynomial in the new ``u, v``."""
        lam = as_gauss(lam)
        out = {}
        for (i, j), c in self.terms.items():
            # (u - lam v)^i = sum_k C(i,k) u^(i-k) (-lam)^k v^k
            neg = -lam
            pw = _ONE
            for k in range(i + 1):
                term = c * pw * comb(i, k)
                e = (i - k, j + k)
                s = out.get(e)
                out[e] = term if s is None else s + term
                pw = pw * neg
        return Poly._raw({e: c for e, c in out.items() if c})

    def swap(self) -> "Poly":
        return Poly._raw({(j, i): c for (i, j), c in self.terms.items()})

    def specialize(self, var: int, value) -> list:
        """Substitute ``value`` for variable ``var``; returns the univariate
        coefficient list (lowest first) in the other variable."""
        value = as_gauss(value)
        other = 1 - var
        n = self.degree_in(other)
        out = [GaussRat(0)] * (n + 1)
        pows = {}
        for e, c in self.terms.items():
            k = e[var]
            pw = pows.get(k)
            if pw is None:
                pw = pows[k] = value ** k
            out[e[other]] = out[e[other]] + c * pw
        while out and not out[-1]:
            out.pop()
        return out

    def coefficients_in(self, var: int) -> list:
        """Write the polynomial as ``sum_k c_k(w) * x**k`` with ``x`` the
        variable ``var``; return ``[c_0, c_1, ...]`` as univariate lists in
        the other variable."""
        other = 1 - var
        n = self.degree_in(var)
        out = [dict() for _ in range(n + 1)]
        for e, c in self.terms.items():
            out[e[var]][e[other]] = c
        lists = []
        for d in out:
            m = max(d, default=-1)
            lst = [d.get(k, GaussRat(0)) for k in range(m + 1)]
            lists.append(lst)
        return lists

    def eval_exact(self, u, v) -> GaussRat:
        u, v = as_gauss(u), as_gauss(v)
        total = GaussRat(0)
        for (i, j), c in self.terms.items():
            total = total + c * (u ** i) * (v ** j)
        return total

    def __call__(self, u, v):
        return evaluate(self, u, v)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (i, j) in sorted(self.terms, key=lambda e: (e[0] + e[1], e[0], e[1])):
            c = self.terms[(i, j)]
            mono = "*".join(x for x in (_var_str("u", i), _var_str("v", j)) if x)
            if c.im and c.re:
                sign, body = "+", f"({c})"
            else:
                neg = (c.re < 0) if not c.im else (c.im < 0)
                sign = "-" if neg else "+"
                a = -c if neg else c
                body = "" if (a == 1 and mono) else str(a)
            if body and mono:
                text = f"{body}*{mono}"
            else:
                text = body or mono
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def _var_str(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


@dataclass(frozen=True)
class PolyMap:
    """A map ``(u, v) -> (f1(u, v), f2(u, v))``."""
    f1: Poly
    f2: Poly

    def __iter__(self):
        return iter((self.f1, self.f2))

    def __getitem__(self, i):
        return (self.f1, self.f2)[i]

    def translate(self, c) -> "PolyMap":
        """``f + c`` for a point ``c`` of C^2."""
        return PolyMap(self.f1 + as_gauss(c[0]), self.f2 + as_gauss(c[1]))

    def at_origin(self):
        return (self.f1.constant_term(), self.f2.constant_term())

    @property
    def degrees(self):
        return (self.f1.degree, self.f2.degree)

    @property
    def degree(self) -> int:
        return max(self.degrees)

    def __str__(self):
        return f"f1 = {self.f1}\nf2 = {self.f2}"


@dataclass(frozen=True)
class JacobianData:
    det: Poly
    sigma: frozenset


def support_pair(f: PolyMap, augment: bool = True):
    """Supports of the two components, optionally with the origin adjoined
    (the support of ``f - y`` for a generic target ``y``)."""
    from .lattice import Support, SupportPair
    if f.f1.is_zero() or f.f2.is_zero():
        raise ValueError("zero component polynomial")
    s1, s2 = set(f.f1.support), set(f.f2.support)
    if augment:
        s1.add((0, 0))
        s2.add((0, 0))
    return SupportPair(Support(s1), Support(s2))


def restrict_to_face(p: Poly, g) -> Poly:
    points = g.points if hasattr(g, "points") else g
    return p.restrict(points)


def jacobian(f: PolyMap) -> JacobianData:
    det = f.f1.diff(0) * f.f2.diff(1) - f.f1.diff(1) * f.f2.diff(0)
    return JacobianData(det, det.support)


def evaluate(p: Poly, u, v):
    """Numeric evaluation at complex ``u, v`` (Horner in ``v`` per power of
    ``u``) at the current mpmath precision."""
    u = mpmath.mpc(u) if not isinstance(u, GaussRat) else u.to_mpc()
    v = mpmath.mpc(v) if not isinstance(v, GaussRat) else v.to_mpc()
    rows = {}
    for (i, j), c in p.terms.items():
        rows.setdefault(i, {})[j] = c.to_mpc()
    total = mpmath.mpc(0)
    for i, row in rows.items():
        acc = mpmath.mpc(0)
        for j in range(max(row), -1, -1):
            acc = acc * v + row.get(j, 0)
        total += acc * u ** i
    return total
