"""Weyl characters as exact weight multiplicities.

Multiplicities come from Freudenthal's recursion, using the invariant form
built from the symmetrized Cartan matrix.  Only dominant weights are stored;
:func:`monomial_expand` recovers the full character by W0-orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .rootdata import (
    RootSystem,
    Weight,
    dominant_below,
    dominant_conjugate,
    is_dominant,
    orbit,
    pairing,
)

MonomialMap = dict  # Weight -> int, no zero values
SchurVector = dict  # dominant Weight -> int or LaurentPoly


@dataclass(frozen=True)
class Character:
    highest: Weight
    dom_mults: Mapping[Weight, int]

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * len(orbit(rs, mu)) for mu, m in self.dom_mults.items())


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    lr = tuple(x + 1 for x in lam)
    num = den = 1
    for co in rs.positive_coroots:
        num *= pairing(lr, co)
        den *= pairing(rs.rho, co)
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def _freudenthal(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    roots = rs.root_weights()
    lr = tuple(x + 1 for x in lam)
    top = rs.inner(lr, lr)
    mults: dict[Weight, int] = {lam: 1}
    candidates = set(dominant_below(rs, lam))

    def mult(nu):
        d = dominant_conjugate(rs, nu)
        return mults.get(d, 0) if d in candidates else 0

    for mu in dominant_below(rs, lam)[1:]:
        mr = tuple(x + 1 for x in mu)
        denom = top - rs.inner(mr, mr)
        total = Fraction(0)
        for a in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult(nu)
                if not m:
                    break
                total += m * rs.inner(nu, a)
                k += 1
        if total:
            val = 2 * total / denom
            assert val.denominator == 1 and val > 0, (lam, mu, val)
            mults[mu] = int(val)
    return tuple(mults.items())


def weyl_character(rs: RootSystem, lam) -> Character:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return Character(lam, dict(_freudenthal(rs, lam)))


def monomial_expand(rs: RootSystem, c: Character) -> MonomialMap:
    out = {}
    for mu, m in c.dom_mults.items():
        for nu in orbit(rs, mu):
            out[nu] = m
    return out


def schur_expand(rs: RootSystem, m: Mapping[Weight, int]) -> SchurVector:
    """Write a W0-invariant monomial map as an integer combination of Weyl characters.

    Raises ValueError if ``m`` is not constant on W0-orbits.
    """
    rest = {k: v for k, v in m.items() if v}
    out: SchurVector = {}
    while rest:
        dom = [k for k in rest if is_dominant(k)]
        if not dom:
            raise ValueError("monomial map is not W0-invariant (no dominant term)")
        top = max(dom, key=lambda k: (rs.height(k), k))
        coeff = rest[top]
        for nu in orbit(rs, top):
            if rest.get(nu) != coeff:
                raise ValueError(f"monomial map is not W0-invariant on the orbit of {top}")
        out[top] = coeff
        for nu, mult in monomial_expand(rs, weyl_character(rs, top)).items():
            v = rest.get(nu, 0) - coeff * mult
            if v:
                rest[nu] = v
            else:
                rest.pop(nu, None)
    return out


def psi_ell(m: Mapping[Weight, int], ell: int) -> MonomialMap:
    """Frobenius substitution X^mu -> X^(ell mu)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return {tuple(ell * x for x in mu): v for mu, v in m.items()}


def convolve(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> MonomialMap:
    """Product in the group ring Z[X]."""
    out: dict[Weight, int] = {}
    for x, p in a.items():
        for y, q in b.items():
            z = tuple(i + j for i, j in zip(x, y))
            out[z] = out.get(z, 0) + p * q
    return {k: v for k, v in out.items() if v}
