import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dedekind_forge import poly as P
from dedekind_forge.arith import (ArithmeticDomainError, factorint, gcd, gcd_lcm_modular_check, iroot, is_prime,
                                  is_squarefree, lcm, rat_arith, rational_root)


@pytest.mark.parametrize("op,x,y,expected", [
    ("add", Fraction(1, 3), Fraction(1, 6), Fraction(1, 2)),
    ("mul", 0, Fraction(7, 5), 0),
    ("div", Fraction(2, 4), Fraction(1, 2), 1),
    ("sub", "3/4", "1/4", Fraction(1, 2)),
])
def test_rat_arith(op, x, y, expected):
    out = rat_arith(op, x, y)
    assert out == expected
    assert math.gcd(out.numerator, out.denominator) == 1 and out.denominator > 0


def test_rat_div_by_zero():
    with pytest.raises(ArithmeticDomainError):
        rat_arith("div", 1, 0)
    with pytest.raises(ArithmeticDomainError):
        rat_arith("pow", 1, 2)


def test_modular_examples():
    r = gcd_lcm_modular_check(1, 1, 1)
    assert (r.m1_lhs, r.m1_rhs, r.m2_lhs, r.m2_rhs) == (1, 1, 1, 1)
    r = gcd_lcm_modular_check(12, 18, 30)
    # gcd(lcm(12,18), lcm(12,30)) = gcd(36, 60); lcm(12, gcd(18, 60)) = lcm(12, 6)
    assert (r.m1_lhs, r.m1_rhs) == (12, 12) and r.m1 and r.m2
    r = gcd_lcm_modular_check(4, 6, 10)
    assert r.m1 and r.m2


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, -2, 3), (1, 1, 0)])
def test_modular_rejects_nonpositive(bad):
    with pytest.raises(ArithmeticDomainError):
        gcd_lcm_modular_check(*bad)


def test_gcd_conventions():
    assert gcd(0, 7) == 7 and gcd(7, 0) == 7 and lcm(4, 6) == 12


def test_gcd_lcm_dualgruppe_axioms_exhaustive():
    r = range(1, 31)
    for a, b in itertools.product(r, r):
        assert gcd(a, b) == gcd(b, a) and lcm(a, b) == lcm(b, a)
        assert gcd(a, lcm(a, b)) == a and lcm(a, gcd(a, b)) == a
    for a, b, c in itertools.product(r, r, r):
        assert gcd(gcd(a, b), c) == gcd(a, gcd(b, c))
        assert lcm(lcm(a, b), c) == lcm(a, lcm(b, c))


@given(st.integers(0, 10**30), st.integers(1, 7))
def test_iroot_is_floor(n, k):
    x = iroot(n, k)
    assert x ** k <= n < (x + 1) ** k


def test_rational_root():
    assert rational_root(Fraction(4), 2) == 2
    assert rational_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root(Fraction(2), 2) is None


def test_primes_and_factoring():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorint(360) == {2: 3, 3: 2, 5: 1}
    assert is_squarefree(-5) and not is_squarefree(12) and is_squarefree(-1) and not is_squarefree(0)


# ---------------------------------------------------------------- polynomials


@pytest.mark.parametrize("p,lo,hi,expected", [
    ((-2, 0, 1), 1, 2, 1),
    ((1, 0, 1), -10, 10, 0),
    ((-2, 0, 1), -2, 2, 2),
])
def test_sturm_examples(p, lo, hi, expected):
    assert P.sturm_count(p, lo, hi) == expected


def test_sturm_errors():
    with pytest.raises(ArithmeticDomainError):
        P.sturm_count((), 0, 1)
    with pytest.raises(ArithmeticDomainError):
        P.sturm_count((-1, 1), 1, 2)  # root at lo
    with pytest.raises(ArithmeticDomainError):
        P.sturm_count((1, 2, 1), -3, 0)  # not squarefree


def test_sturm_counts_root_at_hi():
    assert P.sturm_count((-1, 1), 0, 1) == 1


def _poly_from_roots(roots, extra=()):
    p = (1,)
    for r in roots:
        p = P.mul(p, (-r.numerator, r.denominator))
    return P.mul(p, extra or (1,))


@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=4, unique=True),
       st.sampled_from([(), (1, 0, 1), (3, 1, 1)]),
       st.fractions(min_value=-25, max_value=25, max_denominator=7),
       st.fractions(min_value=0, max_value=30, max_denominator=7).filter(lambda w: w > 0))
def test_sturm_matches_constructed_roots(roots, extra, lo, width):
    # oracle: the polynomial is built from known rational roots times a root-free quadratic
    hi = lo + width
    p = _poly_from_roots(roots, extra)
    if P.sign_at(p, lo) == 0:
        return
    assert P.sturm_count(p, lo, hi) == sum(1 for r in roots if lo < r <= hi)


def _grid_sign_changes(p, lo, hi, steps=4000):
    xs = [lo + (hi - lo) * Fraction(i, steps) for i in range(steps + 1)]
    signs = [s for s in (P.sign_at(p, x) for x in xs) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=5).filter(lambda c: c[-1] != 0))
def test_sturm_against_bisection_oracle(coeffs):
    p = P.normalize(coeffs)
    if not P.is_squarefree(p):
        return
    B = P.root_bound(p)
    lo, hi = -B, B
    # oracle: sign changes on a grid, refined by bisection between grid points
    grid = _grid_sign_changes(p, lo, hi)
    count = P.sturm_count(p, lo, hi)
    assert grid <= count and (count - grid) % 2 == 0
    if grid != count:
        # close pairs of roots: bisect every grid cell without a sign change but a local extremum crossing
        fine = _grid_sign_changes(p, lo, hi, steps=200000)
        assert fine == count


def test_resultant_compositions():
    assert P.sum_poly((-2, 0, 1), (-2, 0, 1)) == (0, 0, -8, 0, 1)
    assert P.squarefree_part(P.product_poly((-2, 0, 1), (-2, 0, 1))) == (-4, 0, 1)
    # minimal polynomial of sqrt2 + cbrt2
    assert P.sum_poly((-2, 0, 0, 1), (-2, 0, 1)) == (-4, -24, 12, -4, -6, 0, 1)


def test_poly_helpers():
    assert P.gcd(P.mul((1, 1), (-2, 0, 1)), P.mul((1, 1), (3, 1))) == (1, 1)
    assert P.squarefree_part(P.mul((1, 1), (1, 1))) == (1, 1)
    assert P.exact_div((-1, 0, 1), (1, 1)) == (-1, 1)
    assert P.fmt((-2, 0, 1)) == "x^2 - 2"
    assert P.bareiss_det([[2, 1], [1, 3]]) == 5


def test_is_prime_matches_sieve():
    N = 5000
    sieve = [True] * N
    sieve[0] = sieve[1] = False
    for i in range(2, N):
        if sieve[i]:
            for j in range(i * i, N, i):
                sieve[j] = False
    assert [n for n in range(N) if is_prime(n)] == [n for n in range(N) if sieve[n]]
    assert is_prime(2 ** 61 - 1) and not is_prime(3215031751)
