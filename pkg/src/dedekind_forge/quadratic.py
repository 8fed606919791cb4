"""Ideals in rings of integers of quadratic fields.

Elements are ``x + y*w`` with ``w`` either sqrt(d) or (1 + sqrt(d))/2.
A rank-2 submodule is kept in Hermite normal form: the Z-basis
``{a, b + c*w}`` with ``a, c > 0`` and ``0 <= b < a``, so that equal
modules are equal tuples.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .arith import ArithmeticDomainError, factorint, is_prime, is_squarefree


class IdealError(ArithmeticDomainError):
    pass


@dataclass(frozen=True)
class QuadraticRing:
    d: int
    # w satisfies w^2 = trace*w - norm
    trace: int = field(init=False)
    norm: int = field(init=False)

    def __post_init__(self):
        d = self.d
        if d in (0, 1) or not is_squarefree(d):
            raise IdealError(f"d must be squarefree and not 0 or 1, got {d}")
        if d % 4 == 1:
            object.__setattr__(self, "trace", 1)
            object.__setattr__(self, "norm", (1 - d) // 4)
        else:
            object.__setattr__(self, "trace", 0)
            object.__setattr__(self, "norm", -d)

    @property
    def omega_kind(self) -> str:
        return "half_one_plus_sqrt_d" if self.d % 4 == 1 else "sqrt_d"

    @property
    def discriminant(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def ring_of(d: int) -> QuadraticRing:
    return QuadraticRing(d)


@dataclass(frozen=True, order=True)
class QuadInt:
    x: int
    y: int = 0

    def __add__(self, o: "QuadInt") -> "QuadInt":
        return QuadInt(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "QuadInt") -> "QuadInt":
        return QuadInt(self.x - o.x, self.y - o.y)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.x, -self.y)

    def scale(self, k: int) -> "QuadInt":
        return QuadInt(k * self.x, k * self.y)

    def __str__(self) -> str:
        return fmt_elem(self)


def elem_mul(r: QuadraticRing, u: QuadInt, v: QuadInt) -> QuadInt:
    yy = u.y * v.y
    return QuadInt(u.x * v.x - r.norm * yy, u.x * v.y + u.y * v.x + r.trace * yy)


def elem_conj(r: QuadraticRing, z: QuadInt) -> QuadInt:
    return QuadInt(z.x + r.trace * z.y, -z.y)


def elem_norm(r: QuadraticRing, z: QuadInt) -> int:
    return z.x * z.x + r.trace * z.x * z.y + r.norm * z.y * z.y


OMEGA = QuadInt(0, 1)
ONE = QuadInt(1, 0)


def fmt_elem(z: QuadInt) -> str:
    if z.y == 0:
        return str(z.x)
    wpart = "w" if abs(z.y) == 1 else f"{abs(z.y)}*w"
    if z.x == 0:
        return ("-" if z.y < 0 else "") + wpart
    return f"{z.x}{'-' if z.y < 0 else '+'}{wpart}"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*w)?")


def parse_elem(text: str) -> QuadInt:
    """Parse ``"1+w"``, ``"-3"``, ``"2*w"``, ``"1 - 2w"`` into an element."""
    s = text.replace(" ", "")
    if not s:
        raise IdealError("empty element")
    x = y = 0
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise IdealError(f"cannot parse element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise IdealError(f"cannot parse element {text!r}")
        k = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            y += sign * k
        else:
            x += sign * k
        pos = m.end()
    return QuadInt(x, y)


def hnf2(vectors) -> tuple[int, int, int]:
    """HNF (a, b, c) of the Z-span of integer pairs (x, y), which must have rank 2."""
    a = 0
    pivot = None
    for x, y in vectors:
        if y == 0:
            a = math.gcd(a, x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        g, s, t = _egcd(py, y)
        # unimodular step: keep one row with y = g, push the other to the x axis
        pivot = (s * px + t * x, g)
        a = math.gcd(a, (y // g) * px - (py // g) * x)
    if pivot is None or a == 0:
        raise IdealError("generators do not span a rank-2 module")
    px, py = pivot
    if py < 0:
        px, py = -px, -py
    return a, px % a, py


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class Module:
    """A full-rank Z-submodule of the ring, ``Z*a + Z*(b + c*w)``; need not be an ideal."""

    ring: QuadraticRing
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.c <= 0 or not 0 <= self.b < self.a:
            raise IdealError(f"({self.a}, {self.b}, {self.c}) is not in Hermite normal form")

    @property
    def basis(self) -> tuple[QuadInt, QuadInt]:
        return QuadInt(self.a, 0), QuadInt(self.b, self.c)

    @property
    def norm(self) -> int:
        # index in the ring
        return self.a * self.c

    def contains(self, z: QuadInt) -> bool:
        if z.y % self.c:
            return False
        k = z.y // self.c
        return (z.x - k * self.b) % self.a == 0

    def coords(self, z: QuadInt) -> tuple[int, int]:
        """Integer coordinates of z in the basis, assuming membership."""
        k = z.y // self.c
        return (z.x - k * self.b) // self.a, k

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}+{self.c}*w]"


@dataclass(frozen=True)
class Ideal(Module):
    """Nonzero ideal: a module that is also stable under multiplication by w."""

    def __post_init__(self):
        super().__post_init__()
        if self.a % self.c or self.b % self.c:
            raise IdealError(f"({self.a}, {self.b}, {self.c}) violates c | a, c | b")
        for z in self.basis:
            if not self.contains(elem_mul(self.ring, OMEGA, z)):
                raise IdealError(f"{self} is not stable under multiplication by w")

    @property
    def key(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def text(self) -> str:
        return f"{self} in {self.ring}"

    def to_record(self) -> dict:
        return {"d": self.ring.d, "a": self.a, "b": self.b, "c": self.c, "text": str(self)}


def ideal_from_record(rec: dict) -> Ideal:
    return Ideal(ring_of(int(rec["d"])), int(rec["a"]), int(rec["b"]), int(rec["c"]))


def _span_ideal(r: QuadraticRing, elems) -> Ideal:
    vecs = []
    for g in elems:
        for h in (g, elem_mul(r, OMEGA, g)):
            vecs.append((h.x, h.y))
    if all(v == (0, 0) for v in vecs):
        raise IdealError("all generators are zero")
    return Ideal(r, *hnf2(vecs))


def ideal_from_gens(r: QuadraticRing, gens) -> Ideal:
    gens = [g if isinstance(g, QuadInt) else QuadInt(int(g), 0) for g in gens]
    if not gens:
        raise IdealError("need at least one generator")
    return _span_ideal(r, gens)


def unit_ideal(r: QuadraticRing) -> Ideal:
    return Ideal(r, 1, 0, 1)


def _same_ring(I: Module, J: Module) -> QuadraticRing:
    if I.ring != J.ring:
        raise IdealError(f"ring mismatch: {I.ring} vs {J.ring}")
    return I.ring


def ideal_add(I: Ideal, J: Ideal) -> Ideal:
    r = _same_ring(I, J)
    return _span_ideal(r, I.basis + J.basis)


def ideal_mul(I: Ideal, J: Ideal) -> Ideal:
    r = _same_ring(I, J)
    return _span_ideal(r, [elem_mul(r, u, v) for u in I.basis for v in J.basis])


def _dual(rows):
    """Rows of the inverse transpose of a 2x2 rational matrix."""
    (p, q), (s, t) = rows
    det = Fraction(p * t - q * s)
    return [(t / det, -s / det), (-q / det, p / det)]


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """Module intersection, computed as the dual of the sum of dual lattices."""
    r = _same_ring(I, J)
    duals = _dual([(I.a, 0), (I.b, I.c)]) + _dual([(J.a, 0), (J.b, J.c)])
    den = reduce(math.lcm, (v.denominator for row in duals for v in row), 1)
    a, b, c = hnf2([(int(x * den), int(y * den)) for x, y in duals])
    back = _dual([(Fraction(a, den), Fraction(0)), (Fraction(b, den), Fraction(c, den))])
    vecs = [(int(x), int(y)) for x, y in back]
    if any(Fraction(x) != bx or Fraction(y) != by for (x, y), (bx, by) in zip(vecs, back)):
        raise IdealError("intersection lattice is not integral")  # cannot happen for ideals
    return Ideal(r, *hnf2(vecs))


def ideal_contains(I: Module, z: QuadInt) -> bool:
    return I.contains(z)


def ideal_divides(I: Ideal, J: Ideal) -> bool:
    """I | J, i.e. J is contained in I."""
    _same_ring(I, J)
    return all(I.contains(z) for z in J.basis)


def ideal_closure_check(M: Module, samples, multipliers=None) -> bool:
    """Check on samples that M is closed under +, - and multiplication by ring elements.

    ``samples`` are pairs of elements of M; ``multipliers`` defaults to
    1, w and a few mixed ring elements.
    """
    r = M.ring
    if multipliers is None:
        multipliers = [ONE, OMEGA, QuadInt(2, -3), QuadInt(-1, 1)]
    for u, v in samples:
        if not (M.contains(u + v) and M.contains(u - v)):
            return False
        for z in (u, v):
            for m in multipliers:
                if not M.contains(elem_mul(r, m, z)):
                    return False
    # the basis itself is always a sample
    return all(M.contains(elem_mul(r, OMEGA, z)) for z in M.basis)


def ideal_power(I: Ideal, k: int) -> Ideal:
    out = unit_ideal(I.ring)
    for _ in range(k):
        out = ideal_mul(out, I)
    return out


@dataclass(frozen=True)
class Splitting:
    p: int
    kind: str  # "ramified", "split" or "inert"
    primes: tuple  # prime ideals above p, canonically sorted

    def to_record(self) -> dict:
        return {"p": self.p, "kind": self.kind, "primes": [P.to_record() for P in self.primes]}


def split_prime(r: QuadraticRing, p: int) -> Splitting:
    """Decompose (p) by factoring the minimal polynomial of w mod p."""
    if not is_prime(p):
        raise IdealError(f"{p} is not prime")
    roots = [x for x in range(p) if (x * x - r.trace * x + r.norm) % p == 0]
    ideals = sorted({ideal_from_gens(r, [QuadInt(p), QuadInt(-x, 1)]) for x in roots}, key=lambda I: I.key)
    if not ideals:
        return Splitting(p, "inert", (ideal_from_gens(r, [QuadInt(p)]),))
    if len(ideals) == 1:
        return Splitting(p, "ramified", tuple(ideals))
    return Splitting(p, "split", tuple(ideals))


def is_prime_ideal(I: Ideal) -> bool:
    n = I.norm
    if is_prime(n):
        return True
    p = math.isqrt(n)
    return p * p == n and is_prime(p) and split_prime(I.ring, p).kind == "inert" and I == ideal_from_gens(I.ring, [QuadInt(p)])


def ideal_factor(I: Ideal) -> list[tuple[Ideal, int]]:
    """Prime ideal factorization, canonically sorted by (norm, a, b, c)."""
    r = I.ring
    out = []
    for p in sorted(factorint(I.norm)):
        for P in split_prime(r, p).primes:
            k, power = 0, P
            while ideal_divides(power, I):
                k += 1
                power = ideal_mul(power, P)
            if k:
                out.append((P, k))
    out.sort(key=lambda t: (t[0].norm,) + t[0].key)
    if ideal_product(r, out) != I:
        raise IdealError(f"factorization of {I} failed to reconstruct")
    return out


def ideal_product(r: QuadraticRing, factors) -> Ideal:
    out = unit_ideal(r)
    for P, k in factors:
        out = ideal_mul(out, ideal_power(P, k))
    return out


def _ordered_ints():
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def has_element_of_norm(r: QuadraticRing, n: int, bound: int = 100) -> QuadInt | None:
    """An element of norm n, or None.

    For imaginary rings the search is exhaustive (the norm form is
    positive definite); for real rings only |x|, |y| <= bound is tried.
    """
    if r.d < 0:
        if n < 0:
            return None
        disc = -r.discriminant
        # 4N = (2x + t y)^2 + disc * y^2
        ymax = math.isqrt(4 * n // disc) if n else 0
        ys = [y for y in itertools.takewhile(lambda y: abs(y) <= ymax, _ordered_ints())]
        for y in ys:
            rest = 4 * n - disc * y * y
            s = math.isqrt(rest)
            if s * s != rest:
                continue
            for sx in (s, -s):
                if (sx - r.trace * y) % 2 == 0:
                    z = QuadInt((sx - r.trace * y) // 2, y)
                    return z
        return None
    ys = list(itertools.islice(_ordered_ints(), 2 * bound + 1))
    for y in ys:
        for x in ys:
            z = QuadInt(x, y)
            if elem_norm(r, z) == n:
                return z
    return None


def divisors(I: Ideal) -> list[Ideal]:
    fac = ideal_factor(I)
    out = []
    for exps in itertools.product(*(range(k + 1) for _, k in fac)):
        out.append(ideal_product(I.ring, [(P, e) for (P, _), e in zip(fac, exps)]))
    return out


def divisor_lattice(I: Ideal):
    """Divisors of I with join = sum (gcd) and meet = intersection (lcm)."""
    from .lattice import FiniteLattice

    elems = sorted(divisors(I), key=lambda J: (-J.norm,) + J.key)
    index = {J: i for i, J in enumerate(elems)}
    n = len(elems)
    join = [[index[ideal_add(elems[i], elems[j])] for j in range(n)] for i in range(n)]
    meet = [[index[ideal_intersect(elems[i], elems[j])] for j in range(n)] for i in range(n)]
    return FiniteLattice(n, [str(J) for J in elems], join, meet)
