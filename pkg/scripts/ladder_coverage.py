"""How far the successor-only ladder gets at the exponentiation level.

Prints a grid: the value where it agrees with host arithmetic, '.' where the
successor budget ran out.  Slow cells cost about budget / 2e6 seconds each.
"""
import argparse
import time

from dedekind_forge.chains import StepBudgetExceeded, ops_ladder
from dedekind_forge.config import SweepConfig

if __name__ == "__main__":
    cfg = SweepConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=cfg.ladder_max)
    ap.add_argument("--budget", type=int, default=cfg.ladder_budget)
    args = ap.parse_args()
    t0, done, skipped = time.perf_counter(), 0, 0
    print("m\\n " + " ".join(f"{n:>3}" for n in range(1, args.max + 1)))
    for m in range(1, args.max + 1):
        row = []
        for n in range(1, args.max + 1):
            try:
                v = ops_ladder(3, m, n, budget=args.budget)
                assert v == m ** n, (m, n, v)
                row.append("  ok")
                done += 1
            except StepBudgetExceeded:
                row.append("   .")
                skipped += 1
        print(f"{m:>3} " + "".join(row))
    print(f"verified {done}, over budget {skipped}, {time.perf_counter() - t0:.1f}s")
    # successor steps needed for the largest cell, at the measured rate
    print(f"12**12 = {12 ** 12:,} successor steps, roughly {12 ** 12 / 2e6 / 86400:.0f} days at 2e6 steps/s")
