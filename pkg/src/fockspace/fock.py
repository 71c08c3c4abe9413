"""The abstract Fock space: straightening, bar involution, canonical basis.

Elements are kept in canonical form, a finite combination of kets |mu> with
mu dominant (``<mu + rho, alpha_i^vee> >= 1`` for all i).  Any other ket is
rewritten with the three-case relation for |s_i o lam>; kets on a wall
(``<mu + rho, alpha_i^vee> = 0``) are zero.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .characters import Character, monomial_expand
from .laurent import ONE, ZERO, LaurentPoly, format_poly
from .rootdata import (
    RootSystem,
    Weight,
    build_root_system,
    dominant_below,
    is_dominant,
    n_lambda,
    star,
    weyl_dot,
)

DEFAULT_FUEL = 10**6


class FuelExhausted(RuntimeError):
    """Straightening used more rewrite steps than the configured budget."""


class InconsistentBasis(ArithmeticError):
    """The canonical-basis solve met a right-hand side that is not bar-antisymmetric."""


def default_fuel() -> int:
    return int(os.environ.get("FOCK_FUEL", DEFAULT_FUEL))


@dataclass(eq=False)
class FockConfig:
    """Root system, ell and rewrite budget, plus the memo tables for this (type, ell).

    The memo tables are plain dicts; share a config between threads only with
    external locking, otherwise use :meth:`clone`.
    """

    root_system: RootSystem
    ell: int
    fuel: int = field(default_factory=default_fuel)
    _kets: dict = field(default_factory=dict, repr=False)
    _bars: dict = field(default_factory=dict, repr=False)
    _cb: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if isinstance(self.root_system, str):
            self.root_system = build_root_system(self.root_system)
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if self.fuel < 1:
            raise ValueError("fuel must be positive")

    @property
    def type_str(self) -> str:
        return str(self.root_system.cartan_type)

    def clone(self) -> "FockConfig":
        return FockConfig(self.root_system, self.ell, self.fuel)

    def same_space(self, other: "FockConfig") -> bool:
        return self.root_system is other.root_system and self.ell == other.ell


@dataclass(frozen=True, eq=False)
class FockElement:
    config: FockConfig
    terms: Mapping[Weight, LaurentPoly]

    def coeff(self, mu) -> LaurentPoly:
        return self.terms.get(tuple(mu), ZERO)

    def items(self) -> list[tuple[Weight, LaurentPoly]]:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FockElement):
            return NotImplemented
        return self.config.same_space(other.config) and dict(self.terms) == dict(other.terms)

    def __add__(self, other: "FockElement") -> "FockElement":
        return FockElement(self.config, _combine([(1, self.terms), (1, other.terms)]))

    def __sub__(self, other: "FockElement") -> "FockElement":
        return FockElement(self.config, _combine([(1, self.terms), (-1, other.terms)]))

    def __neg__(self):
        return FockElement(self.config, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "FockElement":
        return FockElement(self.config, _combine([(c, self.terms)]))

    def to_json(self) -> dict:
        return {
            "type": self.config.type_str,
            "ell": self.config.ell,
            "terms": [{"wt": list(mu), "coeff": c.to_json()} for mu, c in self.items()],
        }

    @classmethod
    def from_json(cls, cfg: FockConfig, data: dict) -> "FockElement":
        if data["type"] != cfg.type_str or data["ell"] != cfg.ell:
            raise ValueError("JSON element belongs to a different Fock space")
        raw = [(tuple(t["wt"]), LaurentPoly.from_json(t["coeff"])) for t in data["terms"]]
        return straighten(cfg, raw)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"FockElement({self.config.type_str}, ell={self.config.ell}, {format_element(self)})"


def _wt_str(mu: Weight) -> str:
    return ",".join(str(x) for x in mu)


def format_element(x: FockElement) -> str:
    """``|10> - v|8> + v^2|0>``; weights in decreasing lexicographic order."""
    if x.is_zero():
        return "0"
    out = []
    for mu, c in sorted(x.terms.items(), reverse=True):
        neg = c.coeff(c.max_exp()) < 0
        mag = -c if neg else c
        if mag == ONE:
            body = f"|{_wt_str(mu)}>"
        elif len(mag.items()) == 1:
            body = f"{format_poly(mag)}|{_wt_str(mu)}>"
        else:
            body = f"({format_poly(mag)})|{_wt_str(mu)}>"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def _combine(parts) -> dict[Weight, LaurentPoly]:
    acc: dict[Weight, LaurentPoly] = {}
    for c, terms in parts:
        for mu, p in terms.items():
            q = p * c if not (isinstance(c, int) and c == 1) else p
            if mu in acc:
                s = acc[mu] + q
                if s:
                    acc[mu] = s
                else:
                    del acc[mu]
            elif q:
                acc[mu] = q
    return acc


# --- straightening ---------------------------------------------------------

def _rule(rs: RootSystem, ell: int, mu: Weight):
    """One rewriting step for a non-dominant, non-wall ket.

    Returns a list of (sign, v-exponent, weight).
    """
    i = next(k for k, x in enumerate(mu) if x + 1 < 0) + 1
    lam = _simple_dot(rs, i, mu)
    n = lam[i - 1] + 1                 # <lam + rho, alpha_i^vee> > 0
    if n % ell == 0:
        return [(-1, 0, lam)]
    if n < ell:
        return [(-1, 1, lam)]
    j = n % ell
    lam1 = tuple(x - j * a for x, a in zip(lam, rs.simple_root(i)))
    return [(-1, 1, _simple_dot(rs, i, lam1)), (-1, 0, lam1), (-1, 1, lam)]


def _simple_dot(rs, i, mu):
    c = mu[i - 1] + 1
    return tuple(x - c * a for x, a in zip(mu, rs.simple_root(i)))


def _ket(cfg: FockConfig, mu: Weight) -> dict[tuple[Weight, int], int]:
    """Canonical form of one ket as {(weight, v-exponent): coefficient}.

    Memoized in the config; callers must not mutate the result.
    """
    memo = cfg._kets
    got = memo.get(mu)
    if got is not None:
        return got
    rs, ell = cfg.root_system, cfg.ell
    steps = 0
    rules: dict[Weight, list] = {}
    stack = [mu]
    while stack:
        m = stack[-1]
        if m in memo:
            stack.pop()
            continue
        if any(x == -1 for x in m):
            memo[m] = {}
            stack.pop()
            continue
        if all(x >= 0 for x in m):
            memo[m] = {(m, 0): 1}
            stack.pop()
            continue
        rhs = rules.get(m)
        if rhs is None:
            steps += 1
            if steps > cfg.fuel:
                raise FuelExhausted(f"straightening {mu} exceeded {cfg.fuel} rewrite steps")
            rhs = rules[m] = _rule(rs, ell, m)
        pending = [w for _, _, w in rhs if w not in memo]
        if pending:
            stack.extend(pending)
            continue
        acc: dict[tuple[Weight, int], int] = {}
        get = acc.get
        for sign, e, w in rhs:
            for (nu, x), c in memo[w].items():
                key = (nu, x + e)
                acc[key] = get(key, 0) + sign * c
        memo[m] = {k: c for k, c in acc.items() if c}
        del rules[m]
        stack.pop()
    return memo[mu]


def _collect(flat: Mapping[tuple[Weight, int], int], shift: int = 0, sign: int = 1):
    by_wt: dict[Weight, dict[int, int]] = {}
    for (nu, e), c in flat.items():
        by_wt.setdefault(nu, {})[e + shift] = sign * c
    return {nu: LaurentPoly(t) for nu, t in by_wt.items()}


def straighten(cfg: FockConfig, raw) -> FockElement:
    """Canonical form of a raw combination of kets.

    ``raw`` is an iterable of (weight, coefficient) pairs or a mapping; the
    coefficient may be an int or a LaurentPoly.
    """
    items = raw.items() if isinstance(raw, Mapping) else raw
    acc: dict[tuple[Weight, int], int] = {}
    get = acc.get
    for mu, c in items:
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        for e0, c0 in c.items():
            for (nu, e), k in _ket(cfg, tuple(mu)).items():
                key = (nu, e + e0)
                acc[key] = get(key, 0) + c0 * k
    return FockElement(cfg, _collect({k: v for k, v in acc.items() if v}))


def ket(cfg: FockConfig, mu) -> FockElement:
    return straighten(cfg, [(tuple(mu), ONE)])


# --- bar involution --------------------------------------------------------

def _bar_ket(cfg: FockConfig, mu: Weight) -> dict[Weight, LaurentPoly]:
    got = cfg._bars.get(mu)
    if got is not None:
        return got
    rs = cfg.root_system
    n = rs.n_pos
    img = weyl_dot(rs, rs.w0_word, mu)
    out = _collect(_ket(cfg, img), -(n - n_lambda(rs, mu, cfg.ell)), (-1) ** n)
    cfg._bars[mu] = out
    return out


def fock_bar(x: FockElement) -> FockElement:
    cfg = x.config
    return FockElement(cfg, _combine([(c.bar(), _bar_ket(cfg, mu)) for mu, c in x.terms.items()]))


# --- canonical basis -------------------------------------------------------

def canonical_basis(cfg: FockConfig, lam) -> FockElement:
    """C_lam: the bar-invariant element |lam> + sum_{mu < lam} p_{mu lam} |mu>, p in vZ[v]."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    got = cfg._cb.get(lam)
    if got is not None:
        return FockElement(cfg, got)
    # Column-push form of the triangular solve: once p_mu is known, its
    # contribution B_{nu mu} bar(p_mu) is added to every nu below.  Only weights
    # with p_mu != 0 ever need bar|mu>.
    support = dominant_below(cfg.root_system, lam)
    rank = {nu: k for k, nu in enumerate(support)}
    pending: dict[Weight, LaurentPoly] = {}
    coeffs: dict[Weight, LaurentPoly] = {}
    for nu in support:
        if nu == lam:
            p = ONE
        else:
            rhs = pending.pop(nu, ZERO)
            if rhs.coeff(0) or rhs.bar() != -rhs:
                raise InconsistentBasis(
                    f"solving for p_{{{nu},{lam}}}: right side {rhs} is not bar-antisymmetric")
            p = rhs.pos_part()
            if not p:
                continue
        col = _bar_ket(cfg, nu)
        if col.get(nu) != ONE:
            raise InconsistentBasis(f"bar|{nu}> is not unitriangular")
        coeffs[nu] = p
        pb = p.bar()
        for mu, b in col.items():
            if mu == nu:
                continue
            if rank.get(mu, -1) <= rank[nu]:
                raise InconsistentBasis(f"bar|{nu}> has a term |{mu}> not below it")
            pending[mu] = pending.get(mu, ZERO) + b * pb
    cfg._cb[lam] = coeffs
    return FockElement(cfg, coeffs)


def kl_coefficient(cfg: FockConfig, mu, lam) -> LaurentPoly:
    """p_{mu lam}: coefficient of |mu> in C_lam."""
    return canonical_basis(cfg, lam).coeff(mu)


# --- action of symmetric functions -----------------------------------------

def act_monomials(cfg: FockConfig, monomials: Mapping[Weight, int], raw, dual: bool = True) -> FockElement:
    """Apply sum m_mu X^mu to a raw expression and straighten.

    With ``dual`` (the level -ell-h action) X^mu |g> = |g + ell mu*>; without
    it the naive |g + ell mu>, which is only meaningful as a counterexample.
    """
    rs, ell = cfg.root_system, cfg.ell
    items = raw.items() if isinstance(raw, Mapping) else raw
    items = [(tuple(g), LaurentPoly.const(c) if isinstance(c, int) else c) for g, c in items]
    shifts = [((star(rs, mu) if dual else mu), m) for mu, m in monomials.items()]
    out = []
    for s, m in shifts:
        for g, c in items:
            out.append((tuple(x + ell * y for x, y in zip(g, s)), c * m))
    return straighten(cfg, out)


def act_character(c: Character, x: FockElement) -> FockElement:
    """s_c . x for a Weyl character c (each weight used once, with its multiplicity)."""
    cfg = x.config
    return act_monomials(cfg, monomial_expand(cfg.root_system, c), x.terms)
