"""Exact integer and rational arithmetic.

Python ``int`` is the arbitrary precision integer and
``fractions.Fraction`` the rational; both are canonical at construction
(``Fraction`` reduces to lowest terms with a positive denominator), so
equality is structural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

RAT_OPS = ("add", "sub", "mul", "div")


class ArithmeticDomainError(ValueError):
    """Raised when an exact operation is asked for something undefined."""


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` or ``"1e-6"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, Rational, str)):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ArithmeticDomainError(f"not a rational: {x!r}") from exc
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational")


def rat_arith(op: str, x, y) -> Fraction:
    x, y = as_rational(x), as_rational(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ArithmeticDomainError("division by zero")
        return x / y
    raise ArithmeticDomainError(f"unknown rational operation {op!r}")


def gcd(a: int, b: int) -> int:
    # gcd(0, n) = n
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


@dataclass(frozen=True)
class ModularReport:
    a: int
    b: int
    c: int
    m1_lhs: int
    m1_rhs: int
    m2_lhs: int
    m2_rhs: int

    @property
    def m1(self) -> bool:
        return self.m1_lhs == self.m1_rhs

    @property
    def m2(self) -> bool:
        return self.m2_lhs == self.m2_rhs

    def as_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "c": self.c,
            "M1": {"lhs": self.m1_lhs, "rhs": self.m1_rhs, "holds": self.m1},
            "M2": {"lhs": self.m2_lhs, "rhs": self.m2_rhs, "holds": self.m2},
        }


def gcd_lcm_modular_check(a: int, b: int, c: int) -> ModularReport:
    """Evaluate both sides of the two gcd/lcm modular identities.

    M1: gcd(lcm(a, b), lcm(a, c)) == lcm(a, gcd(b, lcm(a, c)))
    M2: lcm(gcd(a, b), gcd(a, c)) == gcd(a, lcm(b, gcd(a, c)))
    """
    for v in (a, b, c):
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise ArithmeticDomainError(f"modular check needs positive integers, got {v!r}")
    return ModularReport(
        a, b, c,
        m1_lhs=gcd(lcm(a, b), lcm(a, c)),
        m1_rhs=lcm(a, gcd(b, lcm(a, c))),
        m2_lhs=lcm(gcd(a, b), gcd(a, c)),
        m2_rhs=gcd(a, lcm(b, gcd(a, c))),
    )


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if n < 0 or k < 1:
        raise ArithmeticDomainError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    # Newton from above
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def rational_root(q: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of a non-negative rational, or None if irrational."""
    q = as_rational(q)
    if q < 0:
        raise ArithmeticDomainError("negative radicand")
    u, v = iroot(q.numerator, k), iroot(q.denominator, k)
    if u ** k == q.numerator and v ** k == q.denominator:
        return Fraction(u, v)
    return None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer; fine at desk scale."""
    if n < 1:
        raise ArithmeticDomainError("factorint needs a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorint(abs(n)).values()) if abs(n) > 1 else n != 0


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
