"""Print every row of the specialisation table with its first triangle rows.

Fully bound cases show integer rows and, where a sequence id is known and a
local b-file exists, the comparison result.  Partially bound cases show
U_n with the remaining symbols free.

    python scripts/list_cases.py [--n-max 6] [--poly-n 3] [--json out.json]
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from unigf import specialize as sp

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class RunConfig:
    n_max: int = 6
    poly_n: int = 3
    bfile_dir: str = str(ROOT / "data" / "bfiles")
    json_out: str = ""


def run_case(case: sp.SpecialCase, cfg: RunConfig) -> dict:
    t0 = time.perf_counter()
    rec = {"case": case.id, "description": case.description,
           "bindings": {k: str(v) for k, v in case.bindings.items()}}
    if case.free_symbols:
        rec["poly"] = sp.specialize_poly(cfg.poly_n, case).to_text()
    else:
        tri = sp.specialize_triangle(case, cfg.n_max)
        rec["rows"] = tri.rows
        bfile = Path(cfg.bfile_dir) / f"b{case.oeis_id[1:]}.txt" if case.oeis_id else None
        if bfile is not None and bfile.exists():
            rep = sp.compare_with_sequence(tri, sp.read_bfile(bfile), case.comparison_mode, case.id)
            rec["oeis"] = rep.to_text()
    rec["seconds"] = round(time.perf_counter() - t0, 4)
    return rec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=RunConfig.n_max)
    ap.add_argument("--poly-n", type=int, default=RunConfig.poly_n)
    ap.add_argument("--json", default="")
    a = ap.parse_args()
    cfg = RunConfig(n_max=a.n_max, poly_n=a.poly_n, json_out=a.json)

    records = [run_case(c, cfg) for c in sp.CASES.values()]
    for r in records:
        binds = ", ".join(f"{k}={v}" for k, v in r["bindings"].items())
        print(f"case {r['case']:>2}  [{binds}]  {r['description']}  ({r['seconds']}s)")
        if "poly" in r:
            print(f"    U_{cfg.poly_n} = {r['poly']}")
        else:
            for row in r["rows"]:
                print("    " + " ".join(map(str, row)))
        if "oeis" in r:
            print(f"    {r['oeis']}")
    if cfg.json_out:
        Path(cfg.json_out).write_text(json.dumps({"config": asdict(cfg), "cases": records}, indent=2))


if __name__ == "__main__":
    main()
