"""Run every claim over a grid of (type, ell) and print a timing/failure table.

    python3 scripts/run_sweeps.py --types A1 A2 B2 G2 --ells 2 3 5 --bound 4
"""
import argparse
import json
import time
from dataclasses import dataclass, field

from fockspace.fock import FockConfig
from fockspace.theorems import CLAIMS, sweep


@dataclass
class SweepGrid:
    types: list = field(default_factory=lambda: ["A1", "A2", "B2", "G2"])
    ells: list = field(default_factory=lambda: [2, 3, 5])
    claims: list = field(default_factory=lambda: sorted(CLAIMS))
    bound: int = 4


def run(grid: SweepGrid):
    rows = []
    for t in grid.types:
        for ell in grid.ells:
            cfg = FockConfig(t, ell)
            for claim in grid.claims:
                t0 = time.perf_counter()
                reps = list(sweep(cfg, claim, grid.bound))
                bad = [r for r in reps if not r.passed]
                rows.append({"type": t, "ell": ell, "claim": claim, "n": len(reps),
                             "failures": len(bad), "seconds": round(time.perf_counter() - t0, 3),
                             "first_failure": bad[0].to_json() if bad else None})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--types", nargs="+", default=SweepGrid().types)
    ap.add_argument("--ells", nargs="+", type=int, default=SweepGrid().ells)
    ap.add_argument("--claims", nargs="+", default=SweepGrid().claims, choices=sorted(CLAIMS))
    ap.add_argument("--bound", type=int, default=4)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    rows = run(SweepGrid(a.types, a.ells, a.claims, a.bound))
    if a.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'type':5} {'ell':>3} {'claim':10} {'n':>5} {'fail':>5} {'sec':>8}")
    for r in rows:
        print(f"{r['type']:5} {r['ell']:>3} {r['claim']:10} {r['n']:>5} {r['failures']:>5} {r['seconds']:>8.2f}")


if __name__ == "__main__":
    main()
