"""Command-line front end: ``dedekind-forge <group> <command> ...``.

Payloads go to stdout as JSON (DOT for ``lattice dot``), diagnostics to
stderr.  Exit codes: 0 ok, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import chains as C
from . import cuts as K
from . import lattice as L
from . import quadratic as Q
from .arith import ArithmeticDomainError, as_rational, fmt_rational, gcd_lcm_modular_check
from .config import SweepConfig

DEFAULT_SEED = SweepConfig().seed
SEED_ENV = "DEDEKIND_FORGE_SEED"


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str  # "ok" or "error"
    payload: Any = None
    diagnostics: list = field(default_factory=list)
    usage: bool = False  # error came from argument parsing

    def __post_init__(self):
        if self.status not in ("ok", "error"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "error" and not self.diagnostics:
            raise ValueError("error result needs a diagnostic")

    @property
    def exit_code(self) -> int:
        if self.status == "ok":
            return 0
        return 2 if self.usage else 1

    def render(self) -> str:
        if isinstance(self.payload, str):
            return self.payload if self.payload.endswith("\n") else self.payload + "\n"
        return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_seed() -> int:
    env = os.environ.get(SEED_ENV)
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer") from None


# ------------------------------------------------------------------ parsing


def parse_rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ArithmeticDomainError, TypeError):
        raise UsageError(f"not a rational: {text!r}") from None


def parse_cut(text: str) -> K.Cut:
    """``3/7``, ``root:N:Q``, ``sqrt:Q`` or a JSON cut record."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return K.cut_from_record(json.loads(text))
        except (json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"bad cut record: {exc}") from None
    if text.startswith("root:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError("expected root:N:Q")
        try:
            n = int(parts[1])
        except ValueError:
            raise UsageError("root index must be an integer") from None
        return K.cut_root(n, parse_rational(parts[2]))
    if text.startswith("sqrt:"):
        return K.cut_root(2, parse_rational(text[5:]))
    return K.cut_of_rational(parse_rational(text))


def parse_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_elems(text: str) -> list[Q.QuadInt]:
    try:
        return [Q.parse_elem(t) for t in text.split(",")]
    except Q.IdealError as exc:
        raise UsageError(str(exc)) from None


def parse_lattice(name: str) -> L.FiniteLattice:
    if name.endswith(".json") or os.path.sep in name:
        try:
            with open(name) as fh:
                return L.FiniteLattice.from_record(json.load(fh))
        except OSError as exc:
            raise UsageError(str(exc)) from None
    fixed = {"n5": L.n5, "m3": L.m3, "fm3": L.free_modular_3, "free-modular-3": L.free_modular_3,
             "fd3": L.free_distributive_3, "free-distributive-3": L.free_distributive_3}
    if name in fixed:
        return fixed[name]()
    kind, _, arg = name.partition(":")
    try:
        k = int(arg)
    except ValueError:
        raise UsageError(f"unknown lattice {name!r}") from None
    if kind == "chain":
        return L.chain(k)
    if kind == "divisors":
        return L.divisors_of(k)
    if kind == "boolean":
        return L.downset_lattice(k, [])
    raise UsageError(f"unknown lattice {name!r}")


def _decimal(q: Fraction, digits: int) -> str:
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole = q.numerator // q.denominator
    frac = (q - whole) * 10 ** digits
    return f"{sign}{whole}.{int(frac):0{digits}d}"


# ------------------------------------------------------------------ handlers


def _cut_arg(args) -> K.Cut:
    if getattr(args, "root", None):
        n, q = args.root
        try:
            n = int(n)
        except ValueError:
            raise UsageError("root index must be an integer") from None
        return K.cut_root(n, parse_rational(q))
    if getattr(args, "rational", None) is not None:
        return K.cut_of_rational(parse_rational(args.rational))
    if getattr(args, "cut", None):
        return parse_cut(args.cut)
    raise UsageError("give a cut, --root N Q or --rational Q")


def cmd_cut(args):
    op = args.cmd
    if op == "of-rational":
        return K.cut_to_record(K.cut_of_rational(parse_rational(args.q)))
    if op == "root":
        return K.cut_to_record(K.cut_root(args.n, parse_rational(args.q)))
    if op == "member":
        return {"member": K.cut_member(parse_cut(args.cut), parse_rational(args.q))}
    if op == "cmp":
        return {"order": K.cut_cmp(parse_cut(args.a), parse_cut(args.b)).value}
    if op in ("add", "mul"):
        fn = K.cut_add if op == "add" else K.cut_mul
        return K.cut_to_record(fn(parse_cut(args.a), parse_cut(args.b)))
    if op == "approx":
        eps = parse_rational(args.eps)
        lo, hi = K.cut_approx(_cut_arg(args), eps)
        digits = max(1, len(str(eps.denominator // max(eps.numerator, 1))) + 1)
        return {"lo": fmt_rational(lo), "hi": fmt_rational(hi), "width": fmt_rational(hi - lo),
                "lo_decimal": _decimal(lo, digits), "hi_decimal": _decimal(hi, digits)}
    if op == "partition-check":
        c = parse_cut(args.cut)
        sample = [parse_rational(s) for s in args.sample]
        if args.random:
            rng = random.Random(args.seed)
            sample += [Fraction(rng.randint(-1000, 1000), rng.randint(1, 100)) for _ in range(args.random)]
        lower, upper = K.cut_partition(c, sample)
        return {"holds": K.cut_partition_check(c, sample),
                "lower": [fmt_rational(q) for q in lower], "upper": [fmt_rational(q) for q in upper]}
    raise UsageError(f"unknown cut command {op!r}")


def _ideals(args, count=None):
    r = Q.ring_of(args.d)
    out = [Q.ideal_from_gens(r, parse_elems(g)) for g in (args.gens or [])]
    for h in args.hnf or []:
        vals = parse_ints(h)
        if len(vals) != 3:
            raise UsageError("--hnf takes a,b,c")
        out.append(Q.Ideal(r, *vals))
    if count is not None and len(out) != count:
        raise UsageError(f"this command takes {count} ideal(s) via --gens/--hnf, got {len(out)}")
    return r, out


def _ideal_payload(I: Q.Ideal) -> dict:
    rec = I.to_record()
    rec["norm"] = I.norm
    rec["ring"] = str(I.ring)
    return rec


def cmd_ideal(args):
    op = args.cmd
    if op == "make":
        _, (I,) = _ideals(args, 1)
        return _ideal_payload(I)
    if op in ("add", "mul", "intersect"):
        _, (I, J) = _ideals(args, 2)
        fn = {"add": Q.ideal_add, "mul": Q.ideal_mul, "intersect": Q.ideal_intersect}[op]
        return _ideal_payload(fn(I, J))
    if op == "contains":
        _, (I,) = _ideals(args, 1)
        (z,) = parse_elems(args.elem)
        return {"contains": Q.ideal_contains(I, z)}
    if op == "divides":
        _, (I, J) = _ideals(args, 2)
        return {"divides": Q.ideal_divides(I, J)}
    if op == "split-prime":
        return Q.split_prime(Q.ring_of(args.d), args.p).to_record()
    if op == "factor":
        r, (I,) = _ideals(args, 1)
        fac = Q.ideal_factor(I)
        return {"ideal": _ideal_payload(I),
                "factors": [{"prime": _ideal_payload(P), "exponent": k} for P, k in fac],
                "reconstructed": Q.ideal_product(r, fac) == I}
    if op == "norm-search":
        z = Q.has_element_of_norm(Q.ring_of(args.d), args.n, args.bound)
        return {"n": args.n, "element": None if z is None else Q.fmt_elem(z)}
    if op == "divisor-lattice":
        _, (I,) = _ideals(args, 1)
        return Q.divisor_lattice(I).to_record()
    raise UsageError(f"unknown ideal command {op!r}")


def _count_or_record(lat: L.FiniteLattice, count: bool):
    return lat.n if count else lat.to_record()


def cmd_lattice(args):
    op = args.cmd
    if op == "check":
        return L.check_dualgruppe(parse_lattice(args.lattice)).to_record()
    if op == "modular":
        lat = parse_lattice(args.lattice)
        rec = L.check_modular(lat).to_record()
        rec["m_equiv_m1m2"] = L.check_m_equiv_m1m2(lat)
        return rec
    if op == "distributive":
        return L.check_distributive(parse_lattice(args.lattice)).to_record()
    if op == "n5":
        return L.n5().to_record()
    if op == "m3":
        return L.m3().to_record()
    if op == "free-modular-3":
        if args.fixture:
            from .fixtures import load_fm3_record
            lat = L.free_modular_3_from_record(load_fm3_record())
        else:
            lat = L.free_modular_3()
        return _count_or_record(lat, args.count)
    if op == "free-distributive-3":
        return _count_or_record(L.free_distributive_3(), args.count)
    if op == "closure":
        if args.universe is not None:
            amb = L.SetAmbient(args.universe)
            gens = [parse_ints(s) for s in args.sets.split(";")]
        elif args.lattice:
            amb = parse_lattice(args.lattice)
            gens = parse_ints(args.ids)
        else:
            raise UsageError("closure needs --universe/--sets or --lattice/--ids")
        return L.generate_sublattice(amb, gens).to_record()
    if op == "hasse":
        return {"edges": [list(e) for e in L.hasse_edges(parse_lattice(args.lattice))]}
    if op == "dot":
        return L.to_dot(parse_lattice(args.lattice))
    raise UsageError(f"unknown lattice command {op!r}")


def cmd_chain(args):
    phi = parse_ints(args.phi)
    dyn = C.FiniteDynamics(len(phi), phi)
    if args.cmd == "closure":
        return {"closure": sorted(C.chain_closure(dyn, parse_ints(args.set)))}
    if args.cmd == "is-chain":
        return {"is_chain": C.is_chain(dyn, parse_ints(args.set))}
    if args.cmd == "similar":
        return {"similar": C.is_similar(dyn)}
    raise UsageError(f"unknown chain command {args.cmd!r}")


def cmd_numbers(args):
    op = args.cmd
    if op == "sis-check":
        return C.check_simply_infinite_prefix(C.presentation(args.presentation), args.n).to_record()
    if op == "ladder":
        return {"level": args.level, "op": C.LADDER[args.level], "m": args.m, "n": args.n,
                "value": C.ops_ladder(args.level, args.m, args.n)}
    if op == "iso":
        iso = C.categorical_iso(C.presentation(args.s1), C.presentation(args.s2), args.n)
        rec = iso.to_record()
        if not args.table:
            rec.pop("table")
        return rec
    if op == "dedekind-finite":
        return {"size": args.size, "dedekind_finite": C.dedekind_finite_check(args.size)}
    raise UsageError(f"unknown numbers command {op!r}")


def cmd_arith(args):
    return gcd_lcm_modular_check(args.a, args.b, args.c).as_dict()


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"sampling seed (env {SEED_ENV})")

    p = _Parser(prog="dedekind-forge", description="Exact cuts, quadratic ideals, lattices and chains.")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def sub(group, name, **kw):
        sp = group.add_parser(name, parents=[common], **kw)
        return sp

    cut = groups.add_parser("cut").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = sub(cut, "of-rational"); s.add_argument("q")
    s = sub(cut, "root"); s.add_argument("n", type=int); s.add_argument("q")
    s = sub(cut, "member"); s.add_argument("cut"); s.add_argument("q")
    for name in ("cmp", "add", "mul"):
        s = sub(cut, name); s.add_argument("a"); s.add_argument("b")
    s = sub(cut, "approx")
    s.add_argument("cut", nargs="?")
    s.add_argument("--root", nargs=2, metavar=("N", "Q"))
    s.add_argument("--rational")
    s.add_argument("--eps", required=True)
    s = sub(cut, "partition-check")
    s.add_argument("cut"); s.add_argument("sample", nargs="*")
    s.add_argument("--random", type=int, default=0, help="add K random rationals")

    ideal = groups.add_parser("ideal").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name in ("make", "add", "mul", "intersect", "contains", "divides", "factor", "divisor-lattice"):
        s = sub(ideal, name)
        s.add_argument("-d", type=int, required=True)
        s.add_argument("--gens", action="append", help="comma-separated generators, e.g. 2,1+w")
        s.add_argument("--hnf", action="append", help="a,b,c")
        if name == "contains":
            s.add_argument("--elem", required=True)
    s = sub(ideal, "split-prime"); s.add_argument("-d", type=int, required=True); s.add_argument("-p", type=int, required=True)
    s = sub(ideal, "norm-search")
    s.add_argument("-d", type=int, required=True); s.add_argument("-n", type=int, required=True)
    s.add_argument("--bound", type=int, default=100)

    lat = groups.add_parser("lattice").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name in ("check", "modular", "distributive", "hasse", "dot"):
        s = sub(lat, name); s.add_argument("lattice", help="n5, m3, fm3, fd3, chain:N, divisors:N, boolean:K or a JSON file")
    sub(lat, "n5"); sub(lat, "m3")
    s = sub(lat, "free-modular-3"); s.add_argument("--count", action="store_true")
    s.add_argument("--fixture", action="store_true", help="use the recorded triple instead of searching")
    s = sub(lat, "free-distributive-3"); s.add_argument("--count", action="store_true")
    s = sub(lat, "closure")
    s.add_argument("--universe", type=int); s.add_argument("--sets", help="0,1;2,3;...")
    s.add_argument("--lattice"); s.add_argument("--ids")

    ch = groups.add_parser("chain").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name in ("closure", "is-chain", "similar"):
        s = sub(ch, name); s.add_argument("--phi", required=True, help="table, e.g. 1,2,0")
        if name != "similar":
            s.add_argument("--set", default="", help="comma-separated elements")

    num = groups.add_parser("numbers").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = sub(num, "sis-check"); s.add_argument("--presentation", default="unary"); s.add_argument("-n", type=int, default=100)
    s = sub(num, "ladder")
    s.add_argument("--level", type=int, choices=sorted(C.LADDER), required=True)
    s.add_argument("m", type=int); s.add_argument("n", type=int, nargs="?", default=1)
    s = sub(num, "iso")
    s.add_argument("s1"); s.add_argument("s2"); s.add_argument("-n", type=int, default=100)
    s.add_argument("--table", action="store_true")
    s = sub(num, "dedekind-finite"); s.add_argument("--size", type=int, required=True)

    ar = groups.add_parser("arith").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = sub(ar, "modular-check")
    for v in ("a", "b", "c"):
        s.add_argument(v, type=int)
    return p


HANDLERS = {"cut": cmd_cut, "ideal": cmd_ideal, "lattice": cmd_lattice,
            "chain": cmd_chain, "numbers": cmd_numbers, "arith": cmd_arith}


def run(argv) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
        if args.seed is None:
            args.seed = default_seed()
        return CommandResult("ok", HANDLERS[args.group](args))
    except UsageError as exc:
        return CommandResult("error", None, [f"usage error: {exc}"], usage=True)
    except (ArithmeticDomainError, L.LatticeError, C.ChainError, ValueError) as exc:
        return CommandResult("error", None, [f"{type(exc).__name__}: {exc}"])


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return 0 if argv else 2
    res = run(argv)
    if res.status == "ok":
        sys.stdout.write(res.render())
    for line in res.diagnostics:
        print(line, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
