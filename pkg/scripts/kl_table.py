"""Tabulate canonical-basis coefficients p_{mu,lam} for all dominant lam in a box.

    python3 scripts/kl_table.py --type B2 --ell 3 --bound 6
"""
import argparse

from fockspace.fock import FockConfig, canonical_basis
from fockspace.laurent import format_poly
from fockspace.rootdata import dominant_weights_in_box


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", required=True)
    ap.add_argument("--ell", type=int, required=True)
    ap.add_argument("--bound", type=int, default=4)
    a = ap.parse_args()
    cfg = FockConfig(a.type, a.ell)
    for lam in dominant_weights_in_box(cfg.root_system.rank, a.bound):
        c = canonical_basis(cfg, lam)
        for mu, p in sorted(c.items(), reverse=True):
            if mu != lam:
                print(f"{lam}\t{mu}\t{format_poly(p)}")


if __name__ == "__main__":
    main()
