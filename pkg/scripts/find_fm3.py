"""Search for a subspace triple generating the free modular lattice on 3 generators
and record it as the package fixture."""
import argparse
import json
import time
from pathlib import Path

from dedekind_forge.config import FM3SearchConfig
from dedekind_forge.lattice import (check_modular, generate_sublattice, realization_to_record,
                                    search_free_modular_3, SubspaceAmbient)

OUT = Path(__file__).resolve().parents[1] / "src" / "dedekind_forge" / "data" / "fm3_triple.json"

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-dim", type=int, default=FM3SearchConfig.max_dim)
    ap.add_argument("--fields", type=int, nargs="+", default=list(FM3SearchConfig.fields))
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args()
    cfg = FM3SearchConfig(tuple(args.fields), args.max_dim)
    t0 = time.perf_counter()
    real = search_free_modular_3(cfg.fields, cfg.max_dim)
    lat = generate_sublattice(SubspaceAmbient(real.field_size, real.dim), real.generators)
    print(f"q={real.field_size} dim={real.dim} tried={real.candidates_tried} "
          f"size={lat.n} modular={check_modular(lat).holds} ({time.perf_counter() - t0:.2f}s)")
    rec = realization_to_record(real)
    print(json.dumps(rec))
    if args.write:
        OUT.write_text(json.dumps(rec, indent=1) + "\n")
        print(f"wrote {OUT}")
