"""Dense integer polynomials, lowest degree first, as tuples of ints.

Only what algebraic cuts need: exact evaluation signs, gcd and
squarefree parts, Sturm chains and the two resultant compositions that
realise sums and products of roots.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .arith import ArithmeticDomainError

Poly = tuple  # tuple[int, ...]


def normalize(coeffs) -> Poly:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1  # zero polynomial has degree -1


def lc(p: Poly) -> int:
    return p[-1] if p else 0


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return normalize((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, k: int) -> Poly:
    return normalize(k * c for c in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def derivative(p: Poly) -> Poly:
    return normalize(i * p[i] for i in range(1, len(p)))


def content(p: Poly) -> int:
    return reduce(math.gcd, p, 0)


def primitive(p: Poly) -> Poly:
    """Divide out the content and make the leading coefficient positive."""
    if not p:
        return ()
    g = content(p)
    if lc(p) < 0:
        g = -g
    return tuple(c // g for c in p)


def from_fractions(coeffs) -> Poly:
    """Clear denominators of a rational polynomial and return its primitive part."""
    coeffs = [Fraction(c) for c in coeffs]
    den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
    return primitive(normalize(c.numerator * (den // c.denominator) for c in coeffs))


def evaluate(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: Poly, x) -> int:
    """Sign of p(x) for rational x using only integer arithmetic."""
    x = Fraction(x)
    u, v = x.numerator, x.denominator
    n = len(p) - 1
    acc, vpow = 0, 1
    # sum c_i u^i v^(n-i), built from the top so v powers stay aligned
    for c in reversed(p):
        acc = acc * u + c * vpow
        vpow *= v
    return (acc > 0) - (acc < 0)


def prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over the integers."""
    if not b:
        raise ArithmeticDomainError("pseudo-division by zero polynomial")
    db, lb = degree(b), lc(b)
    e = degree(a) - db + 1
    if e <= 0:
        return tuple(a)
    r = list(a)
    while r and len(r) - 1 >= db:
        top, shift = r[-1], len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= top * c
        r = list(normalize(r))
        e -= 1
    return normalize(lb ** e * c for c in r)


def gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over Q (content ignored), leading coefficient positive."""
    a, b = primitive(a), primitive(b)
    while b:
        a, b = b, primitive(prem(a, b))
    return primitive(a)


def exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient a / b over Q, returned as a primitive integer polynomial."""
    if not b:
        raise ArithmeticDomainError("division by zero polynomial")
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = Fraction(lc(b))
    while len(r) >= len(b) and any(r):
        shift = len(r) - len(b)
        t = r[-1] / lb
        q[shift] = t
        for i, c in enumerate(b):
            r[i + shift] -= t * c
        r.pop()
    if any(r):
        raise ArithmeticDomainError("polynomial division is not exact")
    return from_fractions(q)


def squarefree_part(p: Poly) -> Poly:
    p = primitive(p)
    if degree(p) < 1:
        return p
    g = gcd(p, derivative(p))
    return p if degree(g) == 0 else exact_div(p, g)


def is_squarefree(p: Poly) -> bool:
    return degree(p) >= 0 and degree(gcd(p, derivative(p))) <= 0


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain with primitive remainders; signs are those of the classic chain."""
    chain = [p, derivative(p)]
    while chain[-1] and degree(chain[-1]) > 0:
        a, b = chain[-2], chain[-1]
        r = prem(a, b)
        if not r:
            break
        k = degree(a) - degree(b) + 1
        s = 1 if lc(b) > 0 or k % 2 == 0 else -1
        # -rem(a, b) up to a positive factor
        chain.append(primitive(r) if (-s * lc(r)) > 0 else neg(primitive(r)))
    return [c for c in chain if c]


def variations(chain, x) -> int:
    signs = [s for s in (sign_at(c, x) for c in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(p: Poly, lo, hi, chain=None) -> int:
    """Number of distinct real roots of a squarefree p in (lo, hi]."""
    p = normalize(p)
    lo, hi = Fraction(lo), Fraction(hi)
    if not p:
        raise ArithmeticDomainError("zero polynomial has no Sturm count")
    if lo >= hi:
        raise ArithmeticDomainError("need lo < hi")
    if sign_at(p, lo) == 0:
        raise ArithmeticDomainError("polynomial vanishes at the lower endpoint")
    if chain is None:
        if not is_squarefree(p):
            raise ArithmeticDomainError("Sturm count needs a squarefree polynomial")
        chain = sturm_chain(p)
    return variations(chain, lo) - variations(chain, hi)


def count_roots_closed(p: Poly, lo, hi, chain=None) -> int:
    """Distinct roots of squarefree p in [lo, hi]; lo == hi allowed."""
    lo, hi = Fraction(lo), Fraction(hi)
    if chain is None:
        chain = sturm_chain(p)
    at_lo = 1 if sign_at(p, lo) == 0 else 0
    if lo == hi:
        return at_lo
    # V(a) - V(b) counts (a, b] even when a or b is a root
    return variations(chain, lo) - variations(chain, hi) + at_lo


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    a = abs(lc(p))
    return Fraction(a + max((abs(c) for c in p[:-1]), default=0), a) + 1


def bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_resultant(f, g) -> int:
    """Resultant of two integer coefficient lists taken at their formal degrees."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows)


def interpolate(xs, ys) -> tuple:
    """Newton interpolation over Q; returns Fraction coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out
        for k in range(len(out)):
            shifted[k] -= xs[i] * out[k]
        shifted[0] += coef[i]
        out = shifted
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _compose_resultant(f: Poly, g: Poly, column) -> Poly:
    bound = (len(f) - 1) * (len(g) - 1)
    xs = list(range(bound + 1))
    ys = [sylvester_resultant(list(f), column(g, x)) for x in xs]
    return from_fractions(interpolate(xs, ys))


def _shift_in_y(g: Poly, x: int) -> list[int]:
    # coefficients in y of g(x - y)
    out = [0] * len(g)
    for k, c in enumerate(g):
        for j in range(k + 1):
            out[j] += c * math.comb(k, j) * x ** (k - j) * (-1) ** j
    return out


def _homog_in_y(g: Poly, x: int) -> list[int]:
    # coefficients in y of y^deg(g) * g(x / y)
    d = len(g) - 1
    out = [0] * (d + 1)
    for i, c in enumerate(g):
        out[d - i] += c * x ** i
    return out


def sum_poly(f: Poly, g: Poly) -> Poly:
    """A polynomial vanishing at every alpha + beta, f(alpha) = g(beta) = 0."""
    return _compose_resultant(f, g, _shift_in_y)


def product_poly(f: Poly, g: Poly) -> Poly:
    """A polynomial vanishing at every alpha * beta, f(alpha) = g(beta) = 0."""
    return _compose_resultant(f, g, _homog_in_y)


def fmt(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        terms.append(("-" if c < 0 else "+", body))
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])
