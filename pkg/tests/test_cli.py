import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from dedekind_forge import cli
from dedekind_forge.cuts import cut_cmp, cut_from_record, cut_root, Order
from dedekind_forge.lattice import FiniteLattice, n5
from dedekind_forge.quadratic import ideal_from_record, ideal_from_gens, ring_of, parse_elem


def ok(argv):
    res = cli.run(argv)
    assert res.status == "ok", res.diagnostics
    return res.payload


def test_approx_example():
    p = ok(["cut", "approx", "--root", "2", "2", "--eps", "1e-6"])
    lo, hi = Fraction(p["lo"]), Fraction(p["hi"])
    assert lo <= Fraction(14142135, 10 ** 7) and hi >= Fraction(14142136, 10 ** 7)
    assert hi - lo <= Fraction(1, 10 ** 6) and lo * lo < 2 < hi * hi


def test_factor_example():
    p = ok(["ideal", "factor", "-d", "-5", "--gens", "6"])
    got = [(f["prime"]["a"], f["prime"]["b"], f["prime"]["c"], f["exponent"]) for f in p["factors"]]
    assert got == [(2, 1, 1, 2), (3, 1, 1, 1), (3, 2, 1, 1)]


def test_fm3_count_prints_28(capsys):
    assert cli.main(["lattice", "free-modular-3", "--count", "--fixture"]) == 0
    assert capsys.readouterr().out.strip() == "28"


# one representative per subcommand, plus failure modes
SWEEP = [
    (["cut", "of-rational", "3/4"], 0),
    (["cut", "root", "3", "2"], 0),
    (["cut", "member", "sqrt:2", "7/5"], 0),
    (["cut", "cmp", "sqrt:2", "3/2"], 0),
    (["cut", "add", "sqrt:2", "1/2"], 0),
    (["cut", "mul", "sqrt:2", "sqrt:3"], 0),
    (["cut", "approx", "sqrt:3", "--eps", "1/1000"], 0),
    (["cut", "partition-check", "sqrt:2", "1", "3/2", "--random", "5"], 0),
    (["ideal", "make", "-d", "-5", "--gens", "2,1+w"], 0),
    (["ideal", "add", "-d", "-5", "--gens", "2", "--gens", "1+w"], 0),
    (["ideal", "mul", "-d", "-5", "--hnf", "2,1,1", "--hnf", "2,1,1"], 0),
    (["ideal", "intersect", "-d", "-5", "--gens", "2", "--gens", "3"], 0),
    (["ideal", "contains", "-d", "-5", "--gens", "2,1+w", "--elem", "1-w"], 0),
    (["ideal", "divides", "-d", "-5", "--gens", "2,1+w", "--gens", "6"], 0),
    (["ideal", "split-prime", "-d", "-5", "-p", "3"], 0),
    (["ideal", "factor", "-d", "-6", "--gens", "10"], 0),
    (["ideal", "norm-search", "-d", "-5", "-n", "9"], 0),
    (["ideal", "divisor-lattice", "-d", "-5", "--gens", "6"], 0),
    (["lattice", "check", "n5"], 0),
    (["lattice", "modular", "m3"], 0),
    (["lattice", "distributive", "divisors:60"], 0),
    (["lattice", "n5"], 0),
    (["lattice", "m3"], 0),
    (["lattice", "free-modular-3", "--fixture"], 0),
    (["lattice", "free-distributive-3", "--count"], 0),
    (["lattice", "closure", "--universe", "4", "--sets", "0,1;1,2;3"], 0),
    (["lattice", "closure", "--lattice", "fm3", "--ids", "1,2"], 0),
    (["lattice", "hasse", "boolean:3"], 0),
    (["lattice", "dot", "chain:4"], 0),
    (["chain", "closure", "--phi", "1,2,0,3", "--set", "0"], 0),
    (["chain", "is-chain", "--phi", "1,2,0", "--set", "0,1"], 0),
    (["chain", "similar", "--phi", "1,2,0"], 0),
    (["numbers", "sis-check", "--presentation", "binary", "-n", "50"], 0),
    (["numbers", "ladder", "--level", "3", "2", "10"], 0),
    (["numbers", "iso", "unary", "binary", "-n", "30", "--table"], 0),
    (["numbers", "dedekind-finite", "--size", "4"], 0),
    (["arith", "modular-check", "4", "6", "10"], 0),
    # domain errors
    (["cut", "root", "2", "-2"], 1),
    (["ideal", "make", "-d", "4", "--gens", "2"], 1),
    (["ideal", "make", "-d", "-5", "--hnf", "4,1,2"], 1),
    (["ideal", "split-prime", "-d", "-5", "-p", "6"], 1),
    (["chain", "closure", "--phi", "1,5", "--set", "0"], 1),
    (["numbers", "dedekind-finite", "--size", "9"], 1),
    (["numbers", "iso", "unary", "roman"], 1),
    (["arith", "modular-check", "0", "6", "10"], 1),
    # usage errors
    (["bogus"], 2),
    (["cut", "of-rational", "1/0"], 2),
    (["cut"], 2),
    (["cut", "frobnicate"], 2),
    (["cut", "approx", "sqrt:2"], 2),
    (["lattice", "check", "pentagon-ish"], 2),
    (["lattice", "closure"], 2),
    (["numbers", "ladder", "--level", "7", "2", "3"], 2),
    (["arith", "modular-check", "a", "b", "c"], 2),
]


@pytest.mark.parametrize("argv,code", SWEEP, ids=[" ".join(a) for a, _ in SWEEP])
def test_exit_code_sweep(argv, code):
    res = cli.run(argv)
    assert res.exit_code == code, res.diagnostics
    if code:
        assert res.status == "error" and res.diagnostics
    else:
        res.render()


def test_sweep_covers_inventory():
    inventory = {
        "cut": "of-rational root member cmp add mul approx partition-check",
        "ideal": "make add mul intersect contains divides split-prime factor norm-search divisor-lattice",
        "lattice": "check modular distributive n5 m3 free-modular-3 free-distributive-3 closure hasse dot",
        "chain": "closure is-chain similar",
        "numbers": "sis-check ladder iso dedekind-finite",
        "arith": "modular-check",
    }
    covered = {(a[0], a[1]) for a, c in SWEEP if c == 0}
    for group, cmds in inventory.items():
        for c in cmds.split():
            assert (group, c) in covered


def test_error_result_needs_diagnostic():
    with pytest.raises(ValueError):
        cli.CommandResult("error")
    with pytest.raises(ValueError):
        cli.CommandResult("usage", diagnostics=["x"])


@pytest.mark.parametrize("argv", [
    ["lattice", "dot", "fm3"],
    ["lattice", "hasse", "divisors:360"],
    ["ideal", "divisor-lattice", "-d", "-5", "--gens", "6"],
    ["cut", "partition-check", "sqrt:5", "--random", "20"],
    ["cut", "mul", "root:3:2", "sqrt:2"],
])
def test_byte_identical_output(argv):
    outs = {cli.run(argv).render() for _ in range(3)}
    assert len(outs) == 1


def test_subprocess_determinism_and_streams():
    argv = [sys.executable, "-m", "dedekind_forge", "lattice", "dot", "n5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"digraph")
    bad = subprocess.run([sys.executable, "-m", "dedekind_forge", "cut", "root", "2", "-1"], capture_output=True)
    assert bad.returncode == 1 and bad.stdout == b"" and bad.stderr


def test_seed_env_var():
    argv = [sys.executable, "-m", "dedekind_forge", "cut", "partition-check", "sqrt:2", "--random", "8"]
    env = dict(os.environ)
    env.pop(cli.SEED_ENV, None)
    base = subprocess.run(argv, capture_output=True, check=True, env=env).stdout
    env[cli.SEED_ENV] = "7"
    seven = subprocess.run(argv, capture_output=True, check=True, env=env).stdout
    flag = subprocess.run(argv + ["--seed", "7"], capture_output=True, check=True, env={**env, cli.SEED_ENV: "1"}).stdout
    assert base != seven and seven == flag


def test_cut_roundtrip():
    for text in ["5/7", "-3", "sqrt:2", "root:3:5/2"]:
        rec = ok(["cut", "add", text, "0"])
        assert ok(["cut", "add", json.dumps(rec), "0"]) == rec
        assert cut_cmp(cut_from_record(rec), cli.parse_cut(text)) == Order.EQ
    assert cut_from_record(ok(["cut", "root", "2", "2"])) == cut_root(2, Fraction(2))


def test_ideal_roundtrip():
    rec = ok(["ideal", "mul", "-d", "-6", "--gens", "2,w", "--gens", "3,w"])
    hnf = f"{rec['a']},{rec['b']},{rec['c']}"
    assert ok(["ideal", "make", "-d", "-6", "--hnf", hnf]) == rec
    r = ring_of(-6)
    assert ideal_from_record(rec) == ideal_from_gens(r, [parse_elem("w")])


def test_lattice_roundtrip(tmp_path):
    rec = ok(["lattice", "n5"])
    path = tmp_path / "n5.json"
    path.write_text(json.dumps(rec))
    assert FiniteLattice.from_record(rec) == n5()
    assert ok(["lattice", "check", str(path)])["ok"] is True
    assert ok(["lattice", "modular", str(path)])["holds"] is False
    fm = ok(["lattice", "free-modular-3", "--fixture"])
    path.write_text(json.dumps(fm))
    assert ok(["lattice", "modular", str(path)])["holds"] is True
