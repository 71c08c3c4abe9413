"""Executable checks of the product theorem and the identities that follow from it.

Every ``verify_*`` / ``*_check`` function returns a :class:`VerificationReport`;
the two sides are serialized only when they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .characters import (
    MonomialMap,
    monomial_expand,
    psi_ell,
    schur_expand,
    weyl_character,
    weyl_dimension,
)
from .fock import (
    FockConfig,
    FockElement,
    act_character,
    canonical_basis,
    ket,
    kl_coefficient,
    straighten,
)
from .laurent import LaurentPoly
from .rootdata import (
    Weight,
    decompose_restricted,
    dominant_weights_in_box,
    is_dominant,
    is_restricted,
    simple_dot,
    star,
)


@dataclass
class VerificationReport:
    claim: str
    instance: dict
    passed: bool
    lhs: Any = None
    rhs: Any = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"claim": self.claim, "instance": self.instance, "passed": self.passed,
               "lhs": None, "rhs": None}
        if not self.passed:
            out["lhs"], out["rhs"] = self.lhs, self.rhs
        if self.details:
            out["details"] = self.details
        return out


def _instance(cfg: FockConfig, **weights) -> dict:
    return {"type": cfg.type_str, "ell": cfg.ell,
            **{k: list(v) if isinstance(v, tuple) else v for k, v in weights.items()}}


def _wmap_json(m) -> list:
    out = []
    for mu, c in sorted(m.items()):
        out.append([list(mu), c.to_json() if isinstance(c, LaurentPoly) else c])
    return out


def _report(claim, cfg, lhs, rhs, ser, **weights) -> VerificationReport:
    ok = lhs == rhs
    return VerificationReport(claim, _instance(cfg, **weights), ok,
                              None if ok else ser(lhs), None if ok else ser(rhs))


def _dominant(lam) -> Weight:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return lam


# --- product theorem -------------------------------------------------------

def steinberg_product(cfg: FockConfig, lam) -> FockElement:
    """s_{lam1*} . C_{lam0} for lam = ell*lam1 + lam0."""
    lam = _dominant(lam)
    rs = cfg.root_system
    lam0, lam1 = decompose_restricted(lam, cfg.ell)
    return act_character(weyl_character(rs, star(rs, lam1)), canonical_basis(cfg, lam0))


def verify_steinberg(cfg: FockConfig, lam) -> VerificationReport:
    lam = _dominant(lam)
    return _report("steinberg", cfg, steinberg_product(cfg, lam), canonical_basis(cfg, lam),
                   FockElement.to_json, weight=lam)


def mod_t_cancellation_check(cfg: FockConfig, lam0, nu, i: int) -> VerificationReport:
    """|lam0 + ell nu> + |lam0 + ell (s_i o nu)> vanishes mod v."""
    lam0, nu = tuple(lam0), tuple(nu)
    if not is_restricted(lam0, cfg.ell):
        raise ValueError(f"{lam0} is not {cfg.ell}-restricted")
    rs, ell = cfg.root_system, cfg.ell
    a = tuple(x + ell * y for x, y in zip(lam0, nu))
    b = tuple(x + ell * y for x, y in zip(lam0, simple_dot(rs, i, nu)))
    total = straighten(cfg, [(a, 1), (b, 1)])
    ok = all(c.min_exp() >= 1 for c in total.terms.values())
    return VerificationReport("modt", _instance(cfg, lam0=lam0, nu=nu, i=i), ok,
                              None if ok else total.to_json(), None if ok else "0 mod v")


# --- Casselman-Shalika via the -rho block ----------------------------------

def whittaker_avatar(cfg: FockConfig, mu) -> FockElement:
    """The ket |ell mu* - rho>, which stands for t^{-l(w0)/2} A_mu."""
    mu = _dominant(mu)
    rs = cfg.root_system
    w = tuple(cfg.ell * x - 1 for x in star(rs, mu))
    if not is_dominant(w):
        raise ValueError(f"ell*{mu}* - rho = {w} lies on a wall; no Whittaker basis element")
    return ket(cfg, w)


def casselman_shalika_check(cfg: FockConfig, lam) -> VerificationReport:
    """s_lam . |(ell-1) rho> collapses to the single ket |ell lam* + (ell-1) rho>."""
    lam = _dominant(lam)
    rs, ell = cfg.root_system, cfg.ell
    base = tuple(ell - 1 for _ in lam)
    chi = weyl_character(rs, lam)
    raw_terms = sum(monomial_expand(rs, chi).values())
    lhs = act_character(chi, ket(cfg, base))
    rhs = ket(cfg, tuple(ell * x + y for x, y in zip(star(rs, lam), base)))
    rep = _report("cs", cfg, lhs, rhs, FockElement.to_json, weight=lam)
    rep.details = {"raw_terms": raw_terms, "dim": weyl_dimension(rs, lam),
                   "straightened_terms": len(lhs.terms)}
    return rep


def verify_linkage_rho(cfg: FockConfig, lam, i: int) -> VerificationReport:
    """|s_i o (ell lam - rho)> = -|ell lam - rho> and C_{ell lam - rho} = |ell lam - rho>."""
    lam = _dominant(lam)
    rs, ell = cfg.root_system, cfg.ell
    top = tuple(ell * x - 1 for x in lam)
    if not is_dominant(top):
        raise ValueError(f"ell*{lam} - rho is not dominant")
    reflected = ket(cfg, simple_dot(rs, i, top))
    single = ket(cfg, top)
    cb = canonical_basis(cfg, top)
    ok = reflected == -single and cb == single
    return VerificationReport(
        "linkage", _instance(cfg, weight=lam, i=i), ok,
        None if ok else [reflected.to_json(), cb.to_json()],
        None if ok else [(-single).to_json(), single.to_json()])


# --- LLT / Frobenius -------------------------------------------------------

def llt_coefficient(cfg: FockConfig, lam, mu) -> LaurentPoly:
    """Coefficient of |mu> in C_{ell lam}."""
    lam = _dominant(lam)
    return kl_coefficient(cfg, _dominant(mu), tuple(cfg.ell * x for x in lam))


def frobenius_check(cfg: FockConfig, lam) -> VerificationReport:
    """psi_ell(s_lam) = sum_mu p_{ell lam, mu}(1) s_mu."""
    lam = _dominant(lam)
    rs, ell = cfg.root_system, cfg.ell
    lhs = schur_expand(rs, psi_ell(monomial_expand(rs, weyl_character(rs, lam)), ell))
    cb = canonical_basis(cfg, tuple(ell * x for x in lam))
    rhs = {mu: c.eval_one() for mu, c in cb.terms.items() if c.eval_one()}
    return _report("frobenius", cfg, lhs, rhs, _wmap_json, weight=lam)


def gh_coefficients(cfg: FockConfig, lam, nu) -> dict[Weight, LaurentPoly]:
    """mu -> Q^lam_{mu nu}, the coefficients of s_{lam*} . |nu>."""
    lam = _dominant(lam)
    rs = cfg.root_system
    x = act_character(weyl_character(rs, star(rs, lam)), ket(cfg, tuple(nu)))
    return dict(x.terms)


def gh_identity_check(cfg: FockConfig, lam) -> VerificationReport:
    """Q^lam_{mu, 0} = p_{ell lam, mu} for all mu."""
    lam = _dominant(lam)
    lhs = gh_coefficients(cfg, lam, cfg.root_system.zero)
    rhs = dict(canonical_basis(cfg, tuple(cfg.ell * x for x in lam)).terms)
    return _report("gh", cfg, lhs, rhs, _wmap_json, weight=lam)


# --- graded character of the negative-level module --------------------------

@dataclass
class GradedCharacter:
    """Coefficients of q^{-d}, d = 0..depth_bound, each a monomial map."""

    depth_bound: int
    layers: dict[int, MonomialMap]
    experimental: bool = False


def _geometric(layers: list[dict], k: int, shift: Weight | None) -> list[dict]:
    # multiply by 1/(1 - q^{-k} X^shift); shift None means X^0
    out: list[dict] = []
    for d, layer in enumerate(layers):
        cur = dict(layer)
        if d >= k:
            for mu, c in out[d - k].items():
                nu = mu if shift is None else tuple(a + b for a, b in zip(mu, shift))
                v = cur.get(nu, 0) + c
                if v:
                    cur[nu] = v
                else:
                    cur.pop(nu, None)
        out.append(cur)
    return out


def affine_graded_character(cfg: FockConfig, lam, depth: int) -> GradedCharacter:
    """Truncation of s_{ell lam} prod_{k>0} (1-q^-k)^-n prod_alpha (1-q^-k X^alpha)^-1 (1-q^-k X^-alpha)^-1."""
    lam = _dominant(lam)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    rs = cfg.root_system
    top = monomial_expand(rs, weyl_character(rs, tuple(cfg.ell * x for x in lam)))
    layers: list[dict] = [dict(top)] + [{} for _ in range(depth)]
    roots = rs.root_weights()
    for k in range(1, depth + 1):
        for _ in range(rs.rank):
            layers = _geometric(layers, k, None)
        for a in roots:
            layers = _geometric(layers, k, a)
            layers = _geometric(layers, k, tuple(-x for x in a))
    return GradedCharacter(depth, dict(enumerate(layers)),
                           experimental=rs.cartan_type.series in "BCFG")


# --- sweeps ----------------------------------------------------------------

def _linkage_all(cfg, lam):
    reps = [verify_linkage_rho(cfg, lam, i) for i in range(1, cfg.root_system.rank + 1)]
    ok = all(r.passed for r in reps)
    bad = next((r for r in reps if not r.passed), None)
    return VerificationReport("linkage", _instance(cfg, weight=lam), ok,
                              bad and bad.lhs, bad and bad.rhs)


CLAIMS: dict[str, Callable[[FockConfig, Weight], VerificationReport]] = {
    "steinberg": verify_steinberg,
    "cs": casselman_shalika_check,
    "frobenius": frobenius_check,
    "gh": gh_identity_check,
    "linkage": _linkage_all,
}


def sweep(cfg: FockConfig, claim: str, bound: int) -> Iterator[VerificationReport]:
    """Run one claim over every dominant weight with coordinates <= bound, in lexicographic order."""
    check = CLAIMS[claim]
    for lam in dominant_weights_in_box(cfg.root_system.rank, bound):
        if claim == "linkage" and not all(x >= 1 for x in lam):
            continue
        yield check(cfg, lam)
