"""Command-line front end.  Every command is a thin wrapper over the library.

Exit codes: 0 success / all checks passed, 1 a check failed, 2 bad input,
3 rewrite budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import theorems as th
from .characters import monomial_expand, weyl_character
from .fock import (
    FockConfig,
    FockElement,
    FuelExhausted,
    act_character,
    canonical_basis,
    default_fuel,
    fock_bar,
    format_element,
    ket,
    straighten,
)
from .laurent import format_poly
from .rootdata import InvalidCartanType, build_root_system, parse_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FUEL = 0, 1, 2, 3

# command -> (number of weights accepted (min, max), needs --index)
COMMANDS = {
    "straighten": ((1, None), False),
    "bar": ((1, None), False),
    "cb": ((1, 1), False),
    "act": ((2, 2), False),
    "char": ((1, 1), False),
    "steinberg": ((1, 1), False),
    "cs": ((1, 1), False),
    "linkage": ((1, 1), True),
    "modt": ((2, 2), True),
    "frobenius": ((1, 1), False),
    "llt": ((2, 2), False),
    "gh": ((1, 2), False),
    "graded-char": ((1, 1), False),
    "sweep": ((0, 0), False),
}


@dataclass
class CliInvocation:
    command: str
    type_str: str
    ell: int
    weights: list = field(default_factory=list)
    index: int | None = None
    bound: int = 4
    depth: int = 2
    fuel: int | None = None
    json: bool = False
    claim: str = "steinberg"
    monomial: bool = False


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fockspace", description="Abstract Fock space computations.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--type", dest="type_str", required=True, help="Cartan type, e.g. A2")
        s.add_argument("--ell", type=int, default=1 if name == "char" else None,
                       required=name != "char")
        s.add_argument("--weight", action="append", default=[],
                       help="comma-separated fundamental coordinates; repeatable")
        s.add_argument("--fuel", type=int, default=None)
        s.add_argument("--json", action="store_true")
        if COMMANDS[name][1]:
            s.add_argument("--index", type=int, required=True)
        if name == "sweep":
            s.add_argument("--bound", type=int, default=4)
            s.add_argument("--claim", choices=sorted(th.CLAIMS), default="steinberg")
        if name == "graded-char":
            s.add_argument("--depth", type=int, default=2)
        if name == "char":
            s.add_argument("--monomial", action="store_true", help="also emit the full expansion")
    return p


def _glue_weights(argv):
    # "--weight -1,2" would be read as an option; glue the value on
    out, it = [], iter(argv)
    for a in it:
        if a == "--weight":
            out.append("--weight=" + next(it, ""))
        else:
            out.append(a)
    return out


def parse_args(argv) -> CliInvocation:
    parser = _build_parser()
    ns = parser.parse_args(_glue_weights(list(argv)))
    if ns.ell < 1:
        parser.error("--ell must be >= 1")
    try:
        rs = build_root_system(ns.type_str)
    except InvalidCartanType as e:
        parser.error(str(e))
    try:
        weights = [parse_weight(w, rs.rank) for w in ns.weight]
    except ValueError as e:
        parser.error(str(e))
    lo, hi = COMMANDS[ns.command][0]
    if len(weights) < lo or (hi is not None and len(weights) > hi):
        parser.error(f"{ns.command} takes {lo}..{hi if hi is not None else 'n'} --weight values")
    index = getattr(ns, "index", None)
    if index is not None and not 1 <= index <= rs.rank:
        parser.error(f"--index must be in 1..{rs.rank}")
    if ns.fuel is not None and ns.fuel < 1:
        parser.error("--fuel must be positive")
    inv = CliInvocation(ns.command, ns.type_str, ns.ell, weights, index,
                        fuel=ns.fuel, json=ns.json)
    inv.bound = getattr(ns, "bound", inv.bound)
    inv.depth = getattr(ns, "depth", inv.depth)
    inv.claim = getattr(ns, "claim", inv.claim)
    inv.monomial = getattr(ns, "monomial", False)
    if inv.bound < 0 or inv.depth < 0:
        parser.error("--bound and --depth must be >= 0")
    return inv


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _wmap(m) -> list:
    return [[list(k), v] for k, v in sorted(m.items())]


def _report_text(r: th.VerificationReport) -> str:
    inst = " ".join(f"{k}={','.join(map(str, v)) if isinstance(v, list) else v}"
                    for k, v in r.instance.items())
    return f"{'PASS' if r.passed else 'FAIL'} {r.claim} {inst}"


def run(inv: CliInvocation, out=None) -> int:
    out = out or sys.stdout
    cfg = FockConfig(build_root_system(inv.type_str), inv.ell,
                     inv.fuel if inv.fuel is not None else default_fuel())
    rs = cfg.root_system
    w = inv.weights

    def emit_element(x):
        print(_dump(x.to_json()) if inv.json else format_element(x), file=out)
        return EXIT_OK

    def emit_report(r):
        print(_dump(r.to_json()) if inv.json else _report_text(r), file=out)
        return EXIT_OK if r.passed else EXIT_FAIL

    c = inv.command
    if c == "straighten":
        return emit_element(straighten(cfg, [(mu, 1) for mu in w]))
    if c == "bar":
        return emit_element(fock_bar(straighten(cfg, [(mu, 1) for mu in w])))
    if c == "cb":
        return emit_element(canonical_basis(cfg, w[0]))
    if c == "act":
        return emit_element(act_character(weyl_character(rs, w[0]), ket(cfg, w[1])))
    if c == "char":
        ch = weyl_character(rs, w[0])
        data = {"type": cfg.type_str, "highest": list(ch.highest), "dom_mults": _wmap(ch.dom_mults)}
        if inv.monomial:
            data["monomials"] = _wmap(monomial_expand(rs, ch))
        if inv.json:
            print(_dump(data), file=out)
        else:
            for mu, m in data["dom_mults"]:
                print(f"{','.join(map(str, mu))}: {m}", file=out)
            if inv.monomial:
                print("monomials: " + " ".join(f"{','.join(map(str, mu))}:{m}"
                                               for mu, m in data["monomials"]), file=out)
        return EXIT_OK
    if c == "steinberg":
        return emit_report(th.verify_steinberg(cfg, w[0]))
    if c == "cs":
        return emit_report(th.casselman_shalika_check(cfg, w[0]))
    if c == "linkage":
        return emit_report(th.verify_linkage_rho(cfg, w[0], inv.index))
    if c == "modt":
        return emit_report(th.mod_t_cancellation_check(cfg, w[0], w[1], inv.index))
    if c == "frobenius":
        return emit_report(th.frobenius_check(cfg, w[0]))
    if c == "llt":
        p = th.llt_coefficient(cfg, w[0], w[1])
        if inv.json:
            print(_dump({"type": cfg.type_str, "ell": cfg.ell, "lambda": list(w[0]),
                         "mu": list(w[1]), "coeff": p.to_json()}), file=out)
        else:
            print(format_poly(p), file=out)
        return EXIT_OK
    if c == "gh":
        if len(w) == 1:
            return emit_report(th.gh_identity_check(cfg, w[0]))
        q = th.gh_coefficients(cfg, w[0], w[1])
        return emit_element(FockElement(cfg, q))
    if c == "graded-char":
        g = th.affine_graded_character(cfg, w[0], inv.depth)
        data = {"type": cfg.type_str, "ell": cfg.ell, "weight": list(w[0]), "depth": g.depth_bound,
                "experimental": g.experimental,
                "layers": [{"degree": d, "monomials": _wmap(m)} for d, m in sorted(g.layers.items())]}
        if inv.json:
            print(_dump(data), file=out)
        else:
            for layer in data["layers"]:
                body = " ".join(f"{','.join(map(str, mu))}:{m}" for mu, m in layer["monomials"])
                print(f"q^-{layer['degree']}: {body}", file=out)
        return EXIT_OK
    if c == "sweep":
        total = failed = 0
        for r in th.sweep(cfg, inv.claim, inv.bound):
            total += 1
            failed += not r.passed
            if inv.json:
                print(_dump(r.to_json()), file=out)
            elif not r.passed:
                print(_report_text(r), file=out)
        summary = {"claim": inv.claim, "type": cfg.type_str, "ell": cfg.ell, "bound": inv.bound,
                   "instances": total, "failures": failed}
        if inv.json:
            print(_dump({"summary": summary}), file=out)
        else:
            print(f"sweep {inv.claim} {cfg.type_str} ell={cfg.ell} bound={inv.bound}: "
                  f"{total} instances, {failed} failures", file=out)
        return EXIT_OK if failed == 0 else EXIT_FAIL
    raise AssertionError(c)


def main(argv=None) -> int:
    inv = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        return run(inv)
    except FuelExhausted as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FUEL
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
