"""Print the truncated graded character of the affine module for one (type, ell, lambda).

    python3 scripts/graded_character.py --type A1 --ell 1 --weight 0 --depth 3
"""
import argparse

from fockspace.fock import FockConfig
from fockspace.rootdata import parse_weight
from fockspace.theorems import affine_graded_character


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", required=True)
    ap.add_argument("--ell", type=int, required=True)
    ap.add_argument("--weight", required=True)
    ap.add_argument("--depth", type=int, default=2)
    a = ap.parse_args()
    cfg = FockConfig(a.type, a.ell)
    g = affine_graded_character(cfg, parse_weight(a.weight, cfg.root_system.rank), a.depth)
    if g.experimental:
        print("# experimental: non-simply-laced type")
    for d, layer in g.layers.items():
        total = sum(layer.values())
        terms = ", ".join(f"{mu}:{c}" for mu, c in sorted(layer.items(), reverse=True))
        print(f"q^-{d}  dim={total}  {terms}")


if __name__ == "__main__":
    main()
