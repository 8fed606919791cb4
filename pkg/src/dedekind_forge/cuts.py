"""Dedekind cuts of the rationals, decided exactly.

A cut is either the cut of a rational ``q`` or the cut of an irrational
algebraic number, given by a squarefree primitive integer polynomial and
an open rational interval holding exactly one of its roots (and no
rational root).  The lower class is always strict: the cut of ``q``
puts ``q`` itself in the upper class.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from . import poly as P
from .arith import ArithmeticDomainError, as_rational, fmt_rational, iroot, rational_root


class Order(str, enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class CutError(ArithmeticDomainError):
    pass


@dataclass(frozen=True)
class RationalCut:
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.q, self.q

    def __str__(self) -> str:
        return fmt_rational(self.q)


@dataclass(frozen=True)
class AlgebraicCut:
    poly: tuple
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        p = P.normalize(self.poly)
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        object.__setattr__(self, "poly", p)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not p:
            raise CutError("zero polynomial")
        if lo >= hi:
            raise CutError("empty isolating interval")
        if p != P.primitive(p):
            raise CutError("polynomial must be primitive with positive leading coefficient")
        if not P.is_squarefree(p):
            raise CutError("polynomial must be squarefree")
        if P.sign_at(p, lo) == 0 or P.sign_at(p, hi) == 0:
            raise CutError("interval endpoint is a root")
        if P.sturm_count(p, lo, hi) != 1:
            raise CutError("interval does not isolate exactly one root")
        if _rational_root_in(p, lo, hi) is not None:
            raise CutError("isolated root is rational; use the rational variant")

    @classmethod
    def _trusted(cls, poly, lo, hi) -> "AlgebraicCut":
        c = object.__new__(cls)
        object.__setattr__(c, "poly", poly)
        object.__setattr__(c, "lo", lo)
        object.__setattr__(c, "hi", hi)
        return c

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def __str__(self) -> str:
        return f"root of {P.fmt(self.poly)} in ({fmt_rational(self.lo)}, {fmt_rational(self.hi)})"


Cut = Union[RationalCut, AlgebraicCut]


def _bisect(p, lo, hi):
    """One bisection step of an isolating interval; returns (lo, hi, exact_root)."""
    mid = (lo + hi) / 2
    s = P.sign_at(p, mid)
    if s == 0:
        return mid, mid, mid
    if s == P.sign_at(p, lo):
        return mid, hi, None
    return lo, mid, None


def _rational_root_in(p, lo, hi):
    """The rational root of p in the open (lo, hi) holding a single root, if any.

    A rational root u/v of a primitive p has v | lc(p); two such
    fractions are at least 1/lc^2 apart, so once the interval is narrow
    enough the best approximation with bounded denominator is the only
    candidate.
    """
    L = abs(P.lc(p))
    target = Fraction(1, 2 * L * L)
    while hi - lo >= target:
        lo, hi, exact = _bisect(p, lo, hi)
        if exact is not None:
            return exact
    cand = ((lo + hi) / 2).limit_denominator(L)
    if lo < cand < hi and P.sign_at(p, cand) == 0:
        return cand
    return None


def refine(c: Cut) -> Cut:
    """Halve the isolating interval; rational cuts are returned unchanged."""
    if isinstance(c, RationalCut):
        return c
    lo, hi, _ = _bisect(c.poly, c.lo, c.hi)
    return AlgebraicCut._trusted(c.poly, lo, hi)


def defining_poly(c: Cut) -> tuple:
    if isinstance(c, RationalCut):
        return P.primitive((-c.q.numerator, c.q.denominator))
    return c.poly


def cut_of_rational(q) -> RationalCut:
    return RationalCut(as_rational(q))


def cut_root(n: int, q) -> Cut:
    """Cut of the positive real n-th root of a positive rational."""
    q = as_rational(q)
    if n < 2:
        raise CutError("root index must be at least 2")
    if q <= 0:
        raise CutError("radicand must be positive")
    exact = rational_root(q, n)
    if exact is not None:
        return RationalCut(exact)
    # v x^n - u is primitive because gcd(u, v) = 1
    p = (-q.numerator,) + (0,) * (n - 1) + (q.denominator,)
    a = iroot(q.numerator // q.denominator, n)
    return AlgebraicCut._trusted(p, Fraction(a), Fraction(a + 1))


def cut_member(c: Cut, q) -> bool:
    """Is q in the lower class of c?"""
    q = as_rational(q)
    if isinstance(c, RationalCut):
        return q < c.q
    if q <= c.lo:
        return True
    if q >= c.hi:
        return False
    # p has no rational root inside, and changes sign across the only real one
    return P.sign_at(c.poly, q) == P.sign_at(c.poly, c.lo)


def cut_cmp(c1: Cut, c2: Cut) -> Order:
    if isinstance(c1, RationalCut) and isinstance(c2, RationalCut):
        return Order.LT if c1.q < c2.q else Order.GT if c1.q > c2.q else Order.EQ
    if isinstance(c1, RationalCut):
        return Order.LT if cut_member(c2, c1.q) else Order.GT
    if isinstance(c2, RationalCut):
        return Order.GT if cut_member(c1, c2.q) else Order.LT
    g = P.gcd(c1.poly, c2.poly)
    gchain = P.sturm_chain(g) if P.degree(g) > 0 else None
    while True:
        if c1.hi <= c2.lo:
            return Order.LT
        if c2.hi <= c1.lo:
            return Order.GT
        if gchain is not None:
            lo, hi = max(c1.lo, c2.lo), min(c1.hi, c2.hi)
            # g divides both, and neither has a root at a rational inside its interval
            if P.sturm_count(g, lo, hi, chain=gchain) == 1:
                inside1 = P.sign_at(c1.poly, lo) != P.sign_at(c1.poly, hi)
                inside2 = P.sign_at(c2.poly, lo) != P.sign_at(c2.poly, hi)
                if inside1 and inside2:
                    return Order.EQ
        c1, c2 = refine(c1), refine(c2)


def _interval_add(i1, i2):
    return i1[0] + i2[0], i1[1] + i2[1]


def _interval_mul(i1, i2):
    prods = [a * b for a in i1 for b in i2]
    return min(prods), max(prods)


def _combine(c1: Cut, c2: Cut, compose, interval_op) -> Cut:
    h = P.squarefree_part(compose(defining_poly(c1), defining_poly(c2)))
    chain = P.sturm_chain(h)
    while True:
        lo, hi = interval_op(c1.interval, c2.interval)
        if P.count_roots_closed(h, lo, hi, chain) == 1:
            break
        c1, c2 = refine(c1), refine(c2)
    return _isolated(h, lo, hi)


def _isolated(h, lo, hi) -> Cut:
    """Normalize the single root of h in the closed [lo, hi] into a cut."""
    if P.sign_at(h, lo) == 0:
        return RationalCut(lo)
    if P.sign_at(h, hi) == 0:
        return RationalCut(hi)
    r = _rational_root_in(h, lo, hi)
    if r is not None:
        return RationalCut(r)
    return AlgebraicCut._trusted(h, lo, hi)


def cut_neg(c: Cut) -> Cut:
    if isinstance(c, RationalCut):
        return RationalCut(-c.q)
    p = P.primitive(tuple(a * (-1) ** i for i, a in enumerate(c.poly)))
    return AlgebraicCut._trusted(p, -c.hi, -c.lo)


def cut_add(c1: Cut, c2: Cut) -> Cut:
    if isinstance(c1, RationalCut) and isinstance(c2, RationalCut):
        return RationalCut(c1.q + c2.q)
    return _combine(c1, c2, P.sum_poly, _interval_add)


def cut_sub(c1: Cut, c2: Cut) -> Cut:
    return cut_add(c1, cut_neg(c2))


def cut_mul(c1: Cut, c2: Cut) -> Cut:
    if isinstance(c1, RationalCut) and isinstance(c2, RationalCut):
        return RationalCut(c1.q * c2.q)
    for a, b in ((c1, c2), (c2, c1)):
        if isinstance(a, RationalCut):
            if a.q == 0:
                return RationalCut(Fraction(0))
            if a.q == 1:
                return b
    return _combine(c1, c2, P.product_poly, _interval_mul)


def cut_approx(c: Cut, eps) -> tuple[Fraction, Fraction]:
    """Rational bracket of width at most eps, by deterministic bisection.

    Calls on the same cut with smaller eps continue the same bisection
    sequence, so the returned intervals are nested.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise CutError("eps must be positive")
    if isinstance(c, RationalCut):
        return c.q, c.q
    lo, hi = c.lo, c.hi
    while hi - lo > eps:
        lo, hi, _ = _bisect(c.poly, lo, hi)
    return lo, hi


def cut_partition(c: Cut, sample: Iterable) -> tuple[list[Fraction], list[Fraction]]:
    lower, upper = [], []
    for q in sample:
        q = as_rational(q)
        (lower if cut_member(c, q) else upper).append(q)
    return lower, upper


def cut_partition_check(c: Cut, sample: Iterable) -> bool:
    """Finite-sample check that c splits the sampled rationals into two ordered classes."""
    sample = [as_rational(q) for q in sample]
    lower, upper = cut_partition(c, sample)
    if len(lower) + len(upper) != len(sample):
        return False
    if set(lower) & set(upper):
        return False
    return not lower or not upper or max(lower) < min(upper)


def cut_to_record(c: Cut) -> dict:
    if isinstance(c, RationalCut):
        return {"kind": "rational", "num": str(c.q.numerator), "den": str(c.q.denominator)}
    return {
        "kind": "algebraic",
        "coeffs": [str(a) for a in c.poly],
        "lo": fmt_rational(c.lo),
        "hi": fmt_rational(c.hi),
    }


def cut_from_record(rec: dict) -> Cut:
    kind = rec.get("kind")
    if kind == "rational":
        return RationalCut(Fraction(int(rec["num"]), int(rec["den"])))
    if kind == "algebraic":
        return AlgebraicCut(tuple(int(a) for a in rec["coeffs"]), as_rational(rec["lo"]), as_rational(rec["hi"]))
    raise CutError(f"unknown cut kind {kind!r}")
