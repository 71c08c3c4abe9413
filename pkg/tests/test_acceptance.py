"""Exit criteria.  Each test appends one PASS/FAIL line, printed in the terminal summary."""

import itertools
import json
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from fockspace.characters import monomial_expand, weyl_character, weyl_dimension
from fockspace.fock import (
    FockConfig, FockElement, act_character, act_monomials, canonical_basis, fock_bar, ket,
)
from fockspace.laurent import ONE, V, VINV, LaurentPoly
from fockspace.rootdata import (
    build_root_system, dominance_leq, dominant_weights_in_box, simple_dot, star,
)
from fockspace.theorems import (
    casselman_shalika_check, frobenius_check, gh_identity_check, mod_t_cancellation_check,
    steinberg_product,
)

from oracles import alternating_sums, conv

GRID = [(t, ell) for t in ("A1", "A2", "B2", "G2") for ell in (2, 3, 5)]
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def record(request):
    name = request.node.name
    outcome = {"ok": False, "note": ""}
    yield outcome
    status = "PASS" if outcome["ok"] else "FAIL"
    ACCEPTANCE_LINES.append(f"{status} {name} {outcome['note']}".rstrip())


def el(cfg, terms):
    return FockElement(cfg, {(w,): (c if isinstance(c, LaurentPoly) else LaurentPoly.const(c))
                             for w, c in terms})


def test_criterion_01_a1_ell5_golden(record):
    t0 = time.perf_counter()
    c = FockConfig("A1", 5)
    checks = [
        ket(c, (-2,)) == el(c, [(0, -V)]),
        ket(c, (-6,)) == el(c, [(4, -1)]),
        ket(c, (-12,)) == el(c, [(0, -(V ** 3 - V)), (8, V ** 2 - 1), (10, -V)]),
        fock_bar(ket(c, (10,))) == el(c, [(10, 1), (8, -(V - VINV)), (0, V ** 2 - 1)]),
        canonical_basis(c, (8,)) == el(c, [(8, 1), (0, -V)]),
        canonical_basis(c, (10,)) == el(c, [(10, 1), (8, -V), (0, V ** 2)]),
    ]
    elapsed = time.perf_counter() - t0
    record["note"] = f"({sum(checks)}/6 exact, {elapsed:.3f}s)"
    assert all(checks) and elapsed < 1.0
    record["ok"] = True


def test_criterion_02_a1_ell2_golden(record):
    c = FockConfig("A1", 2)
    checks = [
        canonical_basis(c, (4,)) == el(c, [(4, 1), (2, -V), (0, V ** 2)]),
        canonical_basis(c, (6,)) == el(c, [(6, 1), (4, -V), (2, V ** 2), (0, -V ** 3)]),
    ]
    record["note"] = f"({sum(checks)}/2 exact)"
    assert all(checks)
    record["ok"] = True


def test_criterion_03_steinberg_sweep(record):
    t0 = time.perf_counter()
    total = failures = 0
    for t, ell in GRID:
        cfg = FockConfig(t, ell)
        bound = 10 if t in ("A1", "A2") else 6
        for lam in dominant_weights_in_box(cfg.root_system.rank, bound):
            total += 1
            failures += steinberg_product(cfg, lam) != canonical_basis(cfg, lam)
    elapsed = time.perf_counter() - t0
    record["note"] = f"({total} instances, {failures} failures, {elapsed:.1f}s)"
    assert failures == 0 and elapsed < 300
    record["ok"] = True


def test_criterion_04_casselman_shalika_sweep(record):
    total = failures = 0
    for t, ell in GRID:
        cfg = FockConfig(t, ell)
        rs = cfg.root_system
        base = (ell - 1,) * rs.rank
        for lam in dominant_weights_in_box(rs.rank, 6):
            total += 1
            chi = weyl_character(rs, lam)
            got = act_character(chi, ket(cfg, base))
            target = tuple(ell * x + ell - 1 for x in star(rs, lam))
            ok = dict(got.terms) == {target: ONE}
            ok = ok and sum(monomial_expand(rs, chi).values()) == weyl_dimension(rs, lam)
            ok = ok and casselman_shalika_check(cfg, lam).passed
            failures += not ok
    record["note"] = f"({total} instances, {failures} failures)"
    assert failures == 0
    record["ok"] = True


def test_criterion_05_bar_involution_and_triangularity(record):
    failures = total = 0
    for t in ("A1", "A2", "B2", "G2"):
        rng = random.Random(f"c5-{t}")
        cfgs = {ell: FockConfig(t, ell) for ell in (2, 3, 5)}
        rank = build_root_system(t).rank
        for _ in range(200):
            cfg = cfgs[rng.choice((2, 3, 5))]
            mu = tuple(rng.randint(-15, 15) for _ in range(rank))
            x = ket(cfg, mu)
            ok = fock_bar(fock_bar(x)) == x
            lam = tuple(abs(m) for m in mu)
            b = fock_bar(ket(cfg, lam))
            ok = ok and b.coeff(lam) == ONE and all(
                dominance_leq(cfg.root_system, nu, lam) for nu in b.terms)
            total += 1
            failures += not ok
    record["note"] = f"({total} weights, {failures} failures)"
    assert failures == 0
    record["ok"] = True


def test_criterion_06_action_well_defined(record):
    failures = total = 0
    for t in ("A1", "A2", "B2", "G2"):
        rng = random.Random(f"c6-{t}")
        cfgs = {ell: FockConfig(t, ell) for ell in (2, 3, 5)}
        rs = build_root_system(t)
        done = 0
        while done < 100:
            mu = tuple(rng.randint(-15, 15) for _ in range(rs.rank))
            if all(m >= 0 for m in mu):
                continue
            done += 1
            cfg = cfgs[rng.choice((2, 3, 5))]
            lam = tuple(rng.randint(0, 3) for _ in range(rs.rank))
            chi = weyl_character(rs, lam)
            before = act_monomials(cfg, monomial_expand(rs, chi), [(mu, 1)])
            after = act_character(chi, ket(cfg, mu))
            total += 1
            failures += before != after
    # negative test: a single monomial does not act on the quotient
    c = FockConfig("A1", 5)
    wall = act_monomials(c, {(1,): 1}, [((-1,), 1)], dual=False)
    empty = act_monomials(c, {(1,): 1}, [], dual=False)
    discrepancy = wall != empty and wall == ket(c, (4,))
    record["note"] = f"({total} pairs, {failures} failures; X^w1 discrepancy found: {discrepancy})"
    assert failures == 0 and discrepancy
    record["ok"] = True


def test_criterion_07_mod_t_cancellation(record):
    failures = total = 0
    for t, ell in GRID:
        cfg = FockConfig(t, ell)
        rs = cfg.root_system
        rng = random.Random(f"c7-{t}-{ell}")
        for lam0 in itertools.product(range(ell), repeat=rs.rank):
            for _ in range(8):
                nu = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
                for i in range(1, rs.rank + 1):
                    total += 1
                    failures += not mod_t_cancellation_check(cfg, lam0, nu, i).passed
    record["note"] = f"({total} checks, {failures} failures)"
    assert failures == 0
    record["ok"] = True


def test_criterion_08_frobenius_and_gh(record):
    failures = total = 0
    for t, ell in GRID:
        cfg = FockConfig(t, ell)
        for lam in dominant_weights_in_box(cfg.root_system.rank, 4):
            total += 2
            failures += not frobenius_check(cfg, lam).passed
            failures += not gh_identity_check(cfg, lam).passed
    record["note"] = f"({total} checks, {failures} failures)"
    assert failures == 0
    record["ok"] = True


def test_criterion_09_character_engine(record):
    failures = total = 0
    for t in ("A2", "B2"):
        rs = build_root_system(t)
        for lam in dominant_weights_in_box(rs.rank, 4):
            total += 1
            ch = weyl_character(rs, lam)
            num, den = alternating_sums(rs, lam)
            ok = conv(monomial_expand(rs, ch), den) == num
            ok = ok and ch.dimension(rs) == weyl_dimension(rs, lam)
            failures += not ok
    record["note"] = f"({total} weights, {failures} failures)"
    assert failures == 0
    record["ok"] = True


GOLDEN_CASES = [
    ("straighten_A1_5_m2", "straighten", "5", "-2", {0: [[1, -1]]}),
    ("straighten_A1_5_m6", "straighten", "5", "-6", {4: [[0, -1]]}),
    ("straighten_A1_5_m12", "straighten", "5", "-12",
     {0: [[1, 1], [3, -1]], 8: [[0, -1], [2, 1]], 10: [[1, -1]]}),
    ("bar_A1_5_10", "bar", "5", "10", {10: [[0, 1]], 8: [[-1, 1], [1, -1]], 0: [[0, -1], [2, 1]]}),
    ("cb_A1_5_8", "cb", "5", "8", {8: [[0, 1]], 0: [[1, -1]]}),
    ("cb_A1_5_10", "cb", "5", "10", {10: [[0, 1]], 8: [[1, -1]], 0: [[2, 1]]}),
    ("cb_A1_2_4", "cb", "2", "4", {4: [[0, 1]], 2: [[1, -1]], 0: [[2, 1]]}),
    ("cb_A1_2_6", "cb", "2", "6", {6: [[0, 1]], 4: [[1, -1]], 2: [[2, 1]], 0: [[3, -1]]}),
]


def test_criterion_10_cli_golden_json(record):
    mismatches = []
    for name, cmd, ell, wt, expected in GOLDEN_CASES:
        argv = [sys.executable, "-m", "fockspace", cmd, "--type", "A1", "--ell", ell,
                "--weight", wt, "--json"]
        first = subprocess.run(argv, capture_output=True, check=True).stdout
        second = subprocess.run(argv, capture_output=True, check=True).stdout
        golden = (GOLDEN / f"{name}.json").read_bytes()
        decoded = {t["wt"][0]: t["coeff"] for t in json.loads(first)["terms"]}
        if not (first == second == golden and decoded == expected):
            mismatches.append(name)
    record["note"] = f"({len(GOLDEN_CASES)} files, mismatches: {mismatches or 'none'})"
    assert not mismatches
    record["ok"] = True
