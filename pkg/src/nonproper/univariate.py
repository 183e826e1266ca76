"""Dense univariate polynomials over Q(i) as coefficient lists.

A polynomial is a list ``[c0, c1, ..., cn]`` of :class:`GaussRat` with a
non-zero last entry; the zero polynomial is ``[]``.  All helpers return
trimmed lists and never mutate their arguments.
"""
from __future__ import annotations

from .polyring import GaussRat, as_gauss

ZERO = GaussRat(0)
ONE = GaussRat(1)


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def make(coeffs):
    return trim(as_gauss(c) for c in coeffs)


def degree(a) -> int:
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] = out[k] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    c = as_gauss(c)
    if not c:
        return []
    return [x * c for x in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a, n: int):
    result, base = [ONE], a
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result


def divmod_(a, b):
    """Quotient and remainder of ``a`` by a non-zero ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [ZERO] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1] / lead
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] = r[k + j] - c * y
        r.pop()
        r = trim(r)
    return trim(q), r


def rem(a, b):
    return divmod_(a, b)[1]


def quo(a, b):
    return divmod_(a, b)[0]


def monic(a):
    if not a:
        return []
    lead = a[-1]
    if lead == ONE:
        return list(a)
    return [c / lead for c in a]


def gcd(a, b):
    """Monic greatest common divisor (``[]`` when both are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def derivative(a):
    return trim(c * k for k, c in enumerate(a) if k)


def evaluate(a, x):
    x = as_gauss(x)
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def evaluate_mp(a, x):
    import mpmath
    acc = mpmath.mpc(0)
    for c in reversed(a):
        acc = acc * x + (c if not isinstance(c, GaussRat) else c.to_mpc())
    return acc


def compose_linear(a, alpha, beta):
    """``a(alpha*x + beta)``."""
    out = []
    lin = make([beta, alpha])
    for c in reversed(a):
        out = add(mul(out, lin), [c])
    return out


def squarefree_part(a):
    a = trim(a)
    if len(a) <= 1:
        return monic(a)
    return monic(quo(a, gcd(a, derivative(a))))


def squarefree_decomposition(a):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic,
    pairwise coprime, squarefree factors whose product (with powers) is
    ``a`` up to its leading coefficient."""
    a = trim(a)
    if len(a) <= 1:
        return []
    da = derivative(a)
    g = gcd(a, da)
    b = quo(a, g)
    c = quo(da, g)
    d = sub(c, derivative(b))
    out = []
    k = 1
    while len(b) > 1:
        h = gcd(b, d)
        b = quo(b, h)
        c = quo(d, h)
        d = sub(c, derivative(b))
        if len(h) > 1:
            out.append((monic(h), k))
        k += 1
    return out


def part_degree(r, h):
    """Degree of the largest divisor of ``r`` whose roots are all roots
    of ``h`` (counting multiplicity)."""
    r = trim(r)
    total = 0
    g = gcd(r, h)
    while len(g) > 1:
        r = quo(r, g)
        total += len(g) - 1
        g = gcd(r, g)
    return total


def strip_x(a):
    """Remove the factor ``x**k`` of largest ``k``; returns (rest, k)."""
    a = trim(a)
    k = 0
    while k < len(a) and not a[k]:
        k += 1
    return a[k:], k


def resultant(a, b, m=None, n=None):
    """Resultant of ``a, b`` taken with formal degrees ``m, n`` (the
    Sylvester determinant of those sizes)."""
    a, b = trim(a), trim(b)
    m = len(a) - 1 if m is None else m
    n = len(b) - 1 if n is None else n
    da, db = len(a) - 1, len(b) - 1
    if da > m or db > n:
        raise ValueError("formal degree below actual degree")
    if da < m and db < n:
        return ZERO
    factor = ONE
    if da < m:
        if not a:
            return ZERO if n > 0 else ONE
        if (m - da) * n % 2:
            factor = -factor
        factor = factor * b[-1] ** (m - da)
    elif db < n:
        if not b:
            return ZERO if m > 0 else ONE
        factor = factor * a[-1] ** (n - db)
    return factor * _res_exact(a, b)


def _res_exact(a, b):
    """Resultant of two non-zero polynomials at their true degrees."""
    acc = ONE
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return acc * b[0] ** m
        if m == 0:
            return acc * a[0] ** n
        if m < n:
            if m * n % 2:
                acc = -acc
            a, b = b, a
            continue
        r = rem(a, b)
        if not r:
            return ZERO
        # Res(A,B) = (-1)^{mn} b_n^{m-deg r} Res(B, R)
        if m * n % 2:
            acc = -acc
        acc = acc * b[-1] ** (m - (len(r) - 1))
        a, b = b, r


def interpolate(xs, ys):
    """Exact Newton interpolation through ``(xs[k], ys[k])``."""
    xs = [as_gauss(x) for x in xs]
    coef = [as_gauss(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [coef[-1]]
    for k in range(n - 2, -1, -1):
        # out = out * (x - xs[k]) + coef[k]
        shifted = [ZERO] + out
        for j, c in enumerate(out):
            shifted[j] = shifted[j] - c * xs[k]
        shifted[0] = shifted[0] + coef[k]
        out = shifted
    return trim(out)


def to_str(a, var="x") -> str:
    from .polyring import Poly
    return str(Poly.from_univariate(a, 0)).replace("u", var)
