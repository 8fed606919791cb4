"""Finite lattices (Dualgruppen) as explicit join/meet tables.

Law checkers run over every pair or triple of element ids in
lexicographic order, so the reported witness is always the first
failure.  Ambient lattices (subsets of a finite set, subspaces of
F_q^n) feed ``generate_sublattice``, which closes a generator set under
join and meet and numbers the result in a canonical order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np


class LatticeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    n: int
    labels: tuple
    join: tuple
    meet: tuple
    generators: tuple = ()
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        n = self.n
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(self, "join", tuple(tuple(int(v) for v in row) for row in self.join))
        object.__setattr__(self, "meet", tuple(tuple(int(v) for v in row) for row in self.meet))
        object.__setattr__(self, "generators", tuple(self.generators))
        if n < 1 or len(self.labels) != n:
            raise LatticeError("need n >= 1 and one label per element")
        for name, table in (("join", self.join), ("meet", self.meet)):
            if len(table) != n or any(len(row) != n for row in table):
                raise LatticeError(f"{name} table is not {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise LatticeError(f"{name} table has an out-of-range entry")
        if self.check:
            report = check_dualgruppe(self)
            if not report.ok:
                raise LatticeError(f"tables are not a lattice: {report.first_failure()}")

    @classmethod
    def unchecked(cls, n, labels, join, meet) -> "FiniteLattice":
        """Shape-validated tables that may violate the lattice axioms."""
        return cls(n, labels, join, meet, check=False)

    def __eq__(self, other):
        return (isinstance(other, FiniteLattice) and self.labels == other.labels
                and self.join == other.join and self.meet == other.meet)

    def __hash__(self):
        return hash((self.labels, self.join, self.meet))

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.array(self.join, dtype=np.int32), np.array(self.meet, dtype=np.int32)

    def to_record(self) -> dict:
        rec = {"n": self.n, "labels": list(self.labels),
               "join": [list(r) for r in self.join], "meet": [list(r) for r in self.meet]}
        if self.generators:
            rec["generators"] = list(self.generators)
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "FiniteLattice":
        return cls(int(rec["n"]), rec["labels"], rec["join"], rec["meet"], tuple(rec.get("generators", ())))


@dataclass(frozen=True)
class DualgruppeReport:
    commutative: bool
    associative: bool
    absorptive: bool
    witnesses: dict

    @property
    def ok(self) -> bool:
        return self.commutative and self.associative and self.absorptive

    def first_failure(self):
        for k in ("commutative", "associative", "absorptive"):
            if not getattr(self, k):
                return k, self.witnesses[k]
        return None

    def to_record(self) -> dict:
        return {"commutative": self.commutative, "associative": self.associative,
                "absorptive": self.absorptive, "ok": self.ok,
                "witnesses": {k: list(v) for k, v in self.witnesses.items()}}


def check_dualgruppe(L: FiniteLattice) -> DualgruppeReport:
    """Commutativity, associativity and absorption for both operations, exhaustively."""
    wit = {}
    w = _first_pair_failure(L, lambda J, M, x, y: (J[x, y] == J[y, x]) & (M[x, y] == M[y, x]))
    if w:
        wit["commutative"] = w
    w = _first_failure(L, lambda J, M, x, y, z: (J[J[x, y], z] == J[x, J[y, z]]) & (M[M[x, y], z] == M[x, M[y, z]]))
    if w:
        wit["associative"] = w
    w = _first_pair_failure(L, lambda J, M, x, y: (J[x, M[x, y]] == x) & (M[x, J[x, y]] == x))
    if w:
        wit["absorptive"] = w
    return DualgruppeReport("commutative" not in wit, "associative" not in wit,
                            "absorptive" not in wit, wit)


def _require_lattice(L: FiniteLattice):
    if not L.check:
        report = check_dualgruppe(L)
        if not report.ok:
            raise LatticeError(f"not a lattice: {report.first_failure()}")


_CHUNK = 1 << 21  # triples evaluated per numpy batch


def _first_pair_failure(L: FiniteLattice, law):
    J, M = L.arrays
    x = np.arange(L.n)[:, None]
    y = np.arange(L.n)[None, :]
    bad = np.flatnonzero(~np.broadcast_to(law(J, M, x, y), (L.n, L.n)))
    return tuple(int(v) for v in divmod(int(bad[0]), L.n)) if bad.size else None


def _first_failure(L: FiniteLattice, law):
    """First triple (lexicographic) where the vectorized law is false, or None."""
    J, M = L.arrays
    n = L.n
    step = max(1, _CHUNK // (n * n))
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    for start in range(0, n, step):
        a = np.arange(start, min(n, start + step))[:, None, None]
        ok = np.broadcast_to(law(J, M, a, b, c), (a.shape[0], n, n))
        bad = np.flatnonzero(~ok)
        if bad.size:
            i, rest = divmod(int(bad[0]), n * n)
            return start + i, rest // n, rest % n
    return None


# join plays the role of the first operation in the printed laws, meet the second.
def _law_m(J, M, a, b, c):
    return M[J[a, M[b, c]], J[b, c]] == J[M[a, J[b, c]], M[b, c]]


def _law_d1(J, M, a, b, c):
    return J[M[a, b], M[a, c]] == M[a, J[b, c]]


def _law_d2(J, M, a, b, c):
    return M[J[a, b], J[a, c]] == J[a, M[b, c]]


# gcd -> meet, lcm -> join in the divisibility order
def _law_m1(J, M, a, b, c):
    return M[J[a, b], J[a, c]] == J[a, M[b, J[a, c]]]


def _law_m2(J, M, a, b, c):
    return J[M[a, b], M[a, c]] == M[a, J[b, M[a, c]]]


@dataclass(frozen=True)
class LawReport:
    holds: bool
    witness: tuple | None

    def to_record(self) -> dict:
        return {"holds": self.holds, "witness": list(self.witness) if self.witness else None}


@dataclass(frozen=True)
class DistributiveReport:
    d1_holds: bool
    d2_holds: bool
    d1_witness: tuple | None
    d2_witness: tuple | None

    @property
    def holds(self) -> bool:
        return self.d1_holds and self.d2_holds

    @property
    def witness(self):
        return self.d1_witness or self.d2_witness

    def to_record(self) -> dict:
        return {"holds": self.holds, "d1_holds": self.d1_holds, "d2_holds": self.d2_holds,
                "witness": list(self.witness) if self.witness else None}


def check_modular(L: FiniteLattice) -> LawReport:
    _require_lattice(L)
    w = _first_failure(L, _law_m)
    return LawReport(w is None, w)


def check_distributive(L: FiniteLattice) -> DistributiveReport:
    _require_lattice(L)
    w1 = _first_failure(L, _law_d1)
    w2 = _first_failure(L, _law_d2)
    return DistributiveReport(w1 is None, w2 is None, w1, w2)


def check_m_equiv_m1m2(L: FiniteLattice) -> bool:
    """Do the gcd/lcm laws M1 and M2 jointly hold exactly when the modular law does?"""
    _require_lattice(L)
    m1 = _first_failure(L, _law_m1) is None
    m2 = _first_failure(L, _law_m2) is None
    m = _first_failure(L, _law_m) is None
    return (m1 and m2) == m


def lattice_from_order(labels: Sequence, leq) -> FiniteLattice:
    """Build join/meet tables from a partial order that is a lattice."""
    n = len(labels)
    le = [[bool(leq(i, j)) for j in range(n)] for i in range(n)]

    def extreme(cands, least):
        for c in cands:
            if all((le[c][d] if least else le[d][c]) for d in cands):
                return c
        raise LatticeError("order is not a lattice")

    join = [[extreme([k for k in range(n) if le[i][k] and le[j][k]], least=True)
             for j in range(n)] for i in range(n)]
    meet = [[extreme([k for k in range(n) if le[k][i] and le[k][j]], least=False)
             for j in range(n)] for i in range(n)]
    return FiniteLattice(n, labels, join, meet)


def chain(n: int) -> FiniteLattice:
    return lattice_from_order([str(i) for i in range(n)], lambda i, j: i <= j)


def divisors_of(m: int) -> FiniteLattice:
    """Divisor lattice of a positive integer, join = lcm, meet = gcd."""
    ds = [k for k in range(1, m + 1) if m % k == 0]
    return lattice_from_order([str(k) for k in ds], lambda i, j: ds[j] % ds[i] == 0)


def n5() -> FiniteLattice:
    """Pentagon 0 < a < b < 1 with c beside the chain."""
    up = {("0", x) for x in "0abc1"} | {(x, "1") for x in "0abc1"} | {("a", "b")} | {(x, x) for x in "0abc1"}
    labels = ["0", "a", "b", "c", "1"]
    return lattice_from_order(labels, lambda i, j: (labels[i], labels[j]) in up)


def m3() -> FiniteLattice:
    """Diamond: three atoms between 0 and 1."""
    labels = ["0", "a", "b", "c", "1"]
    return lattice_from_order(labels, lambda i, j: i == j or i == 0 or j == 4)


# ---------------------------------------------------------------- ambients


@dataclass(frozen=True)
class SetAmbient:
    """Subsets of {0, .., universe_size - 1} as bitsets; union and intersection."""

    universe_size: int

    def canon(self, s) -> int:
        if isinstance(s, int):
            if not 0 <= s < 1 << self.universe_size:
                raise LatticeError("subset outside the universe")
            return s
        bits = 0
        for i in s:
            if not 0 <= i < self.universe_size:
                raise LatticeError(f"{i} is outside the universe")
            bits |= 1 << i
        return bits

    def join(self, x: int, y: int) -> int:
        return x | y

    def meet(self, x: int, y: int) -> int:
        return x & y

    def sort_key(self, x: int):
        return bin(x).count("1"), x

    def label(self, x: int) -> str:
        return "{" + ",".join(str(i) for i in range(self.universe_size) if x >> i & 1) + "}"


def _rref(rows, q: int) -> tuple:
    m = [list(r) for r in rows]
    out = []
    ncols = len(m[0]) if m else 0
    col = 0
    while m and col < ncols:
        piv = next((r for r in m if r[col] % q), None)
        if piv is None:
            col += 1
            continue
        m.remove(piv)
        inv = pow(piv[col], -1, q)
        piv = [v * inv % q for v in piv]
        m = [[(a - r[col] * b) % q for a, b in zip(r, piv)] for r in m]
        out = [[(a - r[col] * b) % q for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        m = [r for r in m if any(r)]
        col += 1
    return tuple(sorted(tuple(r) for r in out))


def _nullspace(rows, q: int, dim: int) -> tuple:
    """Basis of {v : r.v = 0 for every row r} over F_q."""
    pivots = {}
    for r in rows:
        lead = next(i for i, v in enumerate(r) if v)
        pivots[lead] = r
    free = [i for i in range(dim) if i not in pivots]
    basis = []
    for f in free:
        v = [0] * dim
        v[f] = 1
        for lead, r in pivots.items():
            v[lead] = (-r[f]) % q
        basis.append(v)
    return basis


@lru_cache(maxsize=1 << 16)
def _sub_join(x: tuple, y: tuple, q: int) -> tuple:
    if x == y or not y:
        return x
    if not x:
        return y
    return _rref(list(x) + list(y), q)


@lru_cache(maxsize=1 << 16)
def _sub_perp(x: tuple, q: int, dim: int) -> tuple:
    return _rref(_nullspace(x, q, dim), q)


@dataclass(frozen=True)
class SubspaceAmbient:
    """Subspaces of F_q^dim in reduced row echelon form; sum and intersection."""

    field_size: int
    dim: int

    def canon(self, rows) -> tuple:
        rows = [tuple(int(v) % self.field_size for v in r) for r in rows]
        if any(len(r) != self.dim for r in rows):
            raise LatticeError("vector of the wrong dimension")
        return _rref([r for r in rows if any(r)], self.field_size)

    def join(self, x: tuple, y: tuple) -> tuple:
        return _sub_join(x, y, self.field_size)

    def perp(self, x: tuple) -> tuple:
        return _sub_perp(x, self.field_size, self.dim)

    def meet(self, x: tuple, y: tuple) -> tuple:
        # over a finite field the dot product is nondegenerate, so perp is an involution
        q, n = self.field_size, self.dim
        return _sub_perp(_sub_join(_sub_perp(x, q, n), _sub_perp(y, q, n), q), q, n)

    def sort_key(self, x: tuple):
        return len(x), x

    def label(self, x: tuple) -> str:
        return "<" + ",".join("".join(str(v) for v in r) for r in sorted(x, reverse=True)) + ">"


class _LatticeAmbient:
    def __init__(self, L: FiniteLattice):
        self.L = L

    def canon(self, x) -> int:
        x = int(x)
        if not 0 <= x < self.L.n:
            raise LatticeError("element id out of range")
        return x

    def join(self, x, y):
        return self.L.join[x][y]

    def meet(self, x, y):
        return self.L.meet[x][y]

    def sort_key(self, x):
        return x

    def label(self, x):
        return self.L.labels[x]


def _ambient(a):
    return _LatticeAmbient(a) if isinstance(a, FiniteLattice) else a


def closure(ambient, generators: Iterable) -> list:
    """Canonical elements of the join/meet closure, sorted by the ambient's key."""
    amb = _ambient(ambient)
    gens = [amb.canon(g) for g in generators]
    if not gens:
        raise LatticeError("need at least one generator")
    seen = set(gens)
    frontier = sorted(seen, key=amb.sort_key)
    while frontier:
        new = set()
        done = sorted(seen, key=amb.sort_key)
        for x in frontier:
            for y in done:
                for z in (amb.join(x, y), amb.meet(x, y)):
                    if z not in seen and z not in new:
                        new.add(z)
        seen |= new
        frontier = sorted(new, key=amb.sort_key)
    return sorted(seen, key=amb.sort_key)


def generate_sublattice(ambient, generators: Sequence) -> FiniteLattice:
    amb = _ambient(ambient)
    elems = closure(amb, generators)
    idx = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    join = [[idx[amb.join(x, y)] for y in elems] for x in elems]
    meet = [[idx[amb.meet(x, y)] for y in elems] for x in elems]
    gens = tuple(idx[amb.canon(g)] for g in generators)
    return FiniteLattice(n, [amb.label(e) for e in elems], join, meet, gens)


def independent_subsets(k: int = 3) -> list[int]:
    """k subsets of a 2^k-point universe: point t lies in set i iff bit i of t is set."""
    return [sum(1 << t for t in range(1 << k) if t >> i & 1) for i in range(k)]


def free_distributive_3() -> FiniteLattice:
    return generate_sublattice(SetAmbient(8), independent_subsets(3))


def downset_lattice(n: int, covers: Iterable[tuple[int, int]]) -> FiniteLattice:
    """Lattice of down-closed subsets of a poset given by covering pairs (lower, upper)."""
    if n > 8:
        raise LatticeError("downset lattices are enumerated for at most 8 elements")
    below = [set() for _ in range(n)]  # strict predecessors
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            raise LatticeError("cover pair out of range")
        below[hi].add(lo)
    # transitive closure, detecting cycles
    changed = True
    while changed:
        changed = False
        for v in range(n):
            extra = set().union(*(below[u] for u in below[v])) - below[v] if below[v] else set()
            if extra:
                below[v] |= extra
                changed = True
            if v in below[v]:
                raise LatticeError("covering relation has a cycle")
    downsets = [s for s in range(1 << n)
                if all(not (s >> v & 1) or all(s >> u & 1 for u in below[v]) for v in range(n))]
    amb = SetAmbient(n)
    downsets.sort(key=amb.sort_key)
    idx = {s: i for i, s in enumerate(downsets)}
    m = len(downsets)
    join = [[idx[x | y] for y in downsets] for x in downsets]
    meet = [[idx[x & y] for y in downsets] for x in downsets]
    return FiniteLattice(m, [amb.label(s) for s in downsets], join, meet)


def hasse_edges(L: FiniteLattice) -> list[tuple[int, int]]:
    """Covering pairs (lower, upper), sorted."""
    r = range(L.n)
    lt = [[x != y and L.leq(x, y) for y in r] for x in r]
    return [(x, y) for x in r for y in r
            if lt[x][y] and not any(lt[x][z] and lt[z][y] for z in r)]


def to_dot(L: FiniteLattice, name: str = "lattice") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(L.labels):
        lab = lab.replace('"', '\\"')
        lines.append(f'  n{i} [label="{lab}"];')
    for x, y in hasse_edges(L):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------- free modular lattice

FM3_SIZE = 28


def _three_subspace_blocks(q: int):
    """Indecomposable triples of subspaces: 1-dim pieces (each generator 0 or
    everything) and the 2-dim piece of three distinct lines."""
    blocks = []
    for bits in itertools.product((0, 1), repeat=3):
        blocks.append((1, tuple([[1]] if b else [] for b in bits)))
    blocks.append((2, ([[1, 0]], [[0, 1]], [[1, 1]])))
    return blocks


def _block_sum(blocks, dim: int):
    gens = [[], [], []]
    offset = 0
    for size, pieces in blocks:
        for g, rows in enumerate(pieces):
            for r in rows:
                v = [0] * dim
                v[offset:offset + size] = r
                gens[g].append(v)
        offset += size
    return gens


@dataclass(frozen=True)
class FM3Realization:
    field_size: int
    dim: int
    generators: tuple  # three RREF bases
    candidates_tried: int


def search_free_modular_3(fields=(2, 3), max_dim: int = 8) -> FM3Realization:
    """Bounded search for three subspaces generating a 28-element sublattice.

    Candidates are direct sums of distinct indecomposable blocks,
    tried by field, then total dimension, then block order.
    """
    tried = 0
    for q in fields:
        blocks = _three_subspace_blocks(q)
        for dim in range(1, max_dim + 1):
            for k in range(1, len(blocks) + 1):
                for combo in itertools.combinations(blocks, k):
                    if sum(size for size, _ in combo) != dim:
                        continue
                    tried += 1
                    amb = SubspaceAmbient(q, dim)
                    gens = tuple(amb.canon(rows) for rows in _block_sum(combo, dim))
                    if len(closure(amb, gens)) == FM3_SIZE:
                        return FM3Realization(q, dim, gens, tried)
    raise LatticeError(f"no {FM3_SIZE}-element realization for fields {fields}, dim <= {max_dim} "
                       f"after {tried} candidates")


@lru_cache(maxsize=None)
def _fm3_cached(fields, max_dim) -> FM3Realization:
    return search_free_modular_3(fields, max_dim)


def free_modular_3(fields=(2, 3), max_dim: int = 8) -> FiniteLattice:
    """Sublattice generated by the searched subspace triple; generator ids in ``.generators``."""
    real = _fm3_cached(tuple(fields), max_dim)
    return generate_sublattice(SubspaceAmbient(real.field_size, real.dim), real.generators)


def realization_to_record(real: FM3Realization) -> dict:
    return {"field_size": real.field_size, "dim": real.dim,
            "generators": [[list(r) for r in g] for g in real.generators]}


def free_modular_3_from_record(rec: dict) -> FiniteLattice:
    amb = SubspaceAmbient(int(rec["field_size"]), int(rec["dim"]))
    return generate_sublattice(amb, [amb.canon(g) for g in rec["generators"]])
