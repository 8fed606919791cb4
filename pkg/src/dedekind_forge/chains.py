"""Chains of a self-map, similar (injective) maps, simply infinite systems.

A simply infinite system is presented by a base element, a successor
procedure and an explicit equality on encodings; the checks here look
at finite prefixes only.  The arithmetic ladder (successor, addition,
multiplication, power) is built by iterated recursion over successor
and never calls host ``+``/``*`` on the values it produces.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteDynamics:
    size: int
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        if self.size < 0 or len(self.phi) != self.size:
            raise ChainError("phi must be a total table over the carrier")
        if any(not 0 <= v < self.size for v in self.phi):
            raise ChainError("phi has a value outside the carrier")


def _check_subset(dyn: FiniteDynamics, s: Iterable[int]) -> frozenset:
    s = frozenset(int(v) for v in s)
    if any(not 0 <= v < dyn.size for v in s):
        raise ChainError("element outside the carrier")
    return s


def chain_closure(dyn: FiniteDynamics, seed: Iterable[int]) -> frozenset:
    """Least K containing seed with phi(K) inside K."""
    out = set(_check_subset(dyn, seed))
    work = list(out)
    while work:
        v = dyn.phi[work.pop()]
        if v not in out:
            out.add(v)
            work.append(v)
    return frozenset(out)


def is_chain(dyn: FiniteDynamics, K: Iterable[int]) -> bool:
    K = _check_subset(dyn, K)
    return all(dyn.phi[v] in K for v in K)


def is_similar(dyn: FiniteDynamics) -> bool:
    return len(set(dyn.phi)) == dyn.size


def dedekind_finite_check(size: int) -> bool:
    """True iff no injection of an n-element set into a proper subset exists (n <= 6).

    Every map into every proper subset is enumerated; nothing is
    inferred from the pigeonhole principle.
    """
    if not 0 <= size <= 6:
        raise ChainError("exhaustive regime is limited to sizes 0..6")
    carrier = range(size)
    for k in range(size):
        for target in itertools.combinations(carrier, k):
            for images in itertools.product(target, repeat=size):
                if len(set(images)) == size:
                    return False
    return True


def infinite_witness_check(k: int, f: Callable[[int], int] | None = None) -> bool:
    """Doubling on {1..k} is injective and misses every odd number up to 2k."""
    if k < 1:
        raise ChainError("k must be at least 1")
    f = f or (lambda n: 2 * n)
    images = [f(n) for n in range(1, k + 1)]
    if len(set(images)) != k:
        return False
    odds = set(range(1, 2 * k + 1, 2))
    return not odds & set(images)


# ------------------------------------------------------------ presentations


@dataclass(frozen=True)
class SisPresentation:
    name: str
    base: Any
    succ: Callable[[Any], Any] = field(compare=False)
    eq: Callable[[Any, Any], bool] = field(compare=False)

    def enumerate(self, n: int) -> list:
        out, x = [], self.base
        for k in range(n):
            out.append(x)
            if k + 1 < n:
                x = self.succ(x)
        return out


def _binary_succ(s: str) -> str:
    digits = list(s)
    i = len(digits) - 1
    while i >= 0 and digits[i] == "1":
        digits[i] = "0"
        i -= 1
    if i < 0:
        return "1" + "".join(digits)
    digits[i] = "1"
    return "".join(digits)


def unary() -> SisPresentation:
    return SisPresentation("unary", "|", lambda s: s + "|", lambda a, b: a == b)


def binary() -> SisPresentation:
    return SisPresentation("binary", "1", _binary_succ, lambda a, b: a == b)


def evens() -> SisPresentation:
    return SisPresentation("evens", 2, lambda k: k + 2, lambda a, b: a == b)


def naturals() -> SisPresentation:
    return SisPresentation("naturals", 1, lambda k: k + 1, lambda a, b: a == b)


PRESENTATIONS = {"unary": unary, "binary": binary, "evens": evens, "naturals": naturals}


def presentation(name: str) -> SisPresentation:
    try:
        return PRESENTATIONS[name]()
    except KeyError:
        raise ChainError(f"unknown presentation {name!r}; known: {sorted(PRESENTATIONS)}") from None


@dataclass(frozen=True)
class SisReport:
    n: int
    alpha: bool
    beta: bool
    gamma: bool
    delta: bool
    witness: dict

    @property
    def ok(self) -> bool:
        return self.alpha and self.beta and self.gamma and self.delta

    def to_record(self) -> dict:
        return {"n": self.n, "alpha": self.alpha, "beta": self.beta, "gamma": self.gamma,
                "delta": self.delta, "ok": self.ok, "witness": self.witness}


def check_simply_infinite_prefix(sis: SisPresentation, n: int) -> SisReport:
    """Per-axiom verdicts on the first n elements.

    alpha: succ is defined on the prefix.  beta: the k-th element is the
    k-fold successor of base.  gamma: distinct prefix elements have
    distinct successors.  delta: base is not a successor of a prefix element.
    """
    if n < 2:
        raise ChainError("need n >= 2")
    wit: dict = {}
    prefix = sis.enumerate(n)
    try:
        images = [sis.succ(x) for x in prefix]
        alpha = True
    except Exception as exc:  # a partial successor is exactly an alpha failure
        alpha, images = False, []
        wit["alpha"] = repr(exc)

    beta = True
    x = sis.base
    for k, e in enumerate(prefix):
        if not sis.eq(x, e):
            beta = False
            wit["beta"] = k
            break
        if k + 1 < len(prefix):
            x = sis.succ(x)

    gamma = True
    for i, j in itertools.combinations(range(len(images)), 2):
        if not sis.eq(prefix[i], prefix[j]) and sis.eq(images[i], images[j]):
            gamma = False
            wit["gamma"] = [i, j]
            break

    delta = True
    for i, y in enumerate(images):
        if sis.eq(y, sis.base):
            delta = False
            wit["delta"] = i
            break
    return SisReport(n, alpha, beta, gamma, delta, wit)


# --------------------------------------------------------------- recursion


class StepBudgetExceeded(RuntimeError):
    pass


class Recursion:
    """f(1) = base_value, f(succ k) = step(f(k), k) over a presentation's elements.

    Evaluation walks k from the base with ``succ`` until ``eq(k, target)``.
    """

    def __init__(self, base_value, step, sis: SisPresentation | None = None, budget: list | None = None):
        self.base_value = base_value
        self.step = step
        self.sis = sis or naturals()
        self.budget = budget

    def __call__(self, target):
        sis = self.sis
        k, v = sis.base, self.base_value
        while not sis.eq(k, target):
            if self.budget is not None:
                self.budget[0] -= 1
                if self.budget[0] < 0:
                    raise StepBudgetExceeded("successor budget exhausted")
            v = self.step(v, k)
            k = sis.succ(k)
        return v


def recursion_define(base_value, step, sis: SisPresentation | None = None) -> Recursion:
    return Recursion(base_value, step, sis)


LADDER = {0: "succ", 1: "add", 2: "mul", 3: "pow"}


def ops_ladder(level: int, m: int, n: int = 1, budget: int | None = None) -> int:
    """succ, add, mul, pow on naturals >= 1, each as repetition of the previous level.

    The only primitive is the successor of the naturals presentation.
    ``budget`` caps the total number of recursion steps.
    """
    nat = naturals()
    if level not in LADDER:
        raise ChainError(f"level must be one of {sorted(LADDER)}")
    for v in (m, n):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ChainError("ladder arguments are naturals starting at 1")
    box = None if budget is None else [budget]

    def succ(a):
        return nat.succ(a)

    def add(a, b):
        return Recursion(succ(a), lambda v, _: succ(v), nat, box)(b)

    def mul(a, b):
        return Recursion(a, lambda v, _: add(v, a), nat, box)(b)

    def pow_(a, b):
        return Recursion(a, lambda v, _: mul(v, a), nat, box)(b)

    if level == 0:
        return succ(m)
    return {1: add, 2: mul, 3: pow_}[level](m, n)


@dataclass(frozen=True)
class Isomorphism:
    pairs: tuple
    verified: bool

    def to_record(self) -> dict:
        return {"verified": self.verified, "table": [[str(a), str(b)] for a, b in self.pairs]}


def categorical_iso(s1: SisPresentation, s2: SisPresentation, n: int) -> Isomorphism:
    """Map the k-th element of s1 to the k-th of s2 and verify it on the prefix."""
    for s in (s1, s2):
        if not check_simply_infinite_prefix(s, n).ok:
            raise ChainError(f"presentation {s.name} fails the prefix axioms at n={n}")
    p1, p2 = s1.enumerate(n), s2.enumerate(n)

    def image(x):
        for a, b in zip(p1, p2):
            if s1.eq(a, x):
                return b
        raise ChainError("element outside the prefix")

    ok = s2.eq(image(s1.base), s2.base)
    ok = ok and all(s2.eq(image(s1.succ(x)), s2.succ(image(x))) for x in p1[:-1])
    ok = ok and not any(s2.eq(p2[i], p2[j]) for i, j in itertools.combinations(range(n), 2))
    return Isomorphism(tuple(zip(p1, p2)), ok)


def count_prefix_isomorphisms(s1: SisPresentation, s2: SisPresentation, n: int) -> int:
    """Brute force: injections of the prefixes preserving base and successor."""
    if n > 7:
        raise ChainError("brute force is limited to n <= 7")
    p1, p2 = s1.enumerate(n), s2.enumerate(n)
    count = 0
    for perm in itertools.permutations(range(n)):
        if not s2.eq(p2[perm[0]], s2.base):
            continue
        good = True
        for i in range(n - 1):
            succ_img = s2.succ(p2[perm[i]])
            # s1.succ(p1[i]) is p1[i + 1], which maps to p2[perm[i + 1]]
            if not s2.eq(p2[perm[i + 1]], succ_img):
                good = False
                break
        count += good
    return count
