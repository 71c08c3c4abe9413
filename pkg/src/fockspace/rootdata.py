"""Finite root systems, weights in fundamental coordinates, and dot actions.

A weight is a tuple of ints ``(l_1, ..., l_n)`` with ``l_i = <lam, alpha_i^vee>``.
Simple roots are the columns of the Cartan matrix in these coordinates and
rho is ``(1, ..., 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Weight = tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# classical table, used as a cross-check only
DUAL_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 9,
    "G": lambda n: 4,
}


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_OK or not _RANK_OK[self.series](self.rank):
            raise InvalidCartanType(f"no Cartan type {self.series}{self.rank}")

    @classmethod
    def parse(cls, s: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", s)
        if not m:
            raise InvalidCartanType(f"cannot parse Cartan type {s!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _gram(ct: CartanType) -> list[list[int]]:
    """Inner products (alpha_i, alpha_j) of simple roots, short roots of length^2 2.

    Bourbaki numbering.
    """
    n, s = ct.rank, ct.series
    g = [[0] * n for _ in range(n)]

    def link(i, j, val):
        g[i][j] = g[j][i] = val

    if s == "A":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif s == "B":
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(n - 1):
            link(i, i + 1, -2)
    elif s == "C":
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 2, n - 1, -2)
    elif s == "D":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif s == "E":
        for i in range(n):
            g[i][i] = 2
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif s == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif s == "G":
        g[0][0] = 2
        g[1][1] = 6
        link(0, 1, -3)
    return g


def _invert(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Cartan data for one finite type.  Immutable after :func:`build_root_system`."""

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]   # a_ij = <alpha_j, alpha_i^vee>
    gram: tuple[tuple[int, ...], ...]            # (alpha_i, alpha_j)
    symmetrizers: tuple[int, ...]                # d_i = (alpha_i, alpha_i) / 2
    positive_roots: tuple[tuple[int, ...], ...]  # simple-root coordinates
    positive_coroots: tuple[tuple[int, ...], ...]  # simple-coroot coordinates
    w0_word: tuple[int, ...]                     # 1-based letters
    highest_short_coroot: tuple[int, ...]
    dual_coxeter: int
    _inv_cartan: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    _root_weights: tuple[Weight, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @property
    def n_pos(self) -> int:
        return len(self.positive_roots)

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental coordinates (column i of the Cartan matrix), 1-based."""
        return tuple(row[i - 1] for row in self.cartan_matrix)

    def root_weights(self) -> tuple[Weight, ...]:
        """Positive roots in fundamental-weight coordinates."""
        return self._root_weights

    def to_root_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Solve lam = sum c_i alpha_i exactly."""
        return tuple(sum(r[j] * lam[j] for j in range(self.rank)) for r in self._inv_cartan)

    def height(self, lam: Sequence[int]) -> Fraction:
        return sum(self.to_root_coords(lam))

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """W-invariant form (alpha_i, alpha_i) = 2 d_i, with (lam, alpha_j) = d_j lam_j."""
        c = self.to_root_coords(mu)
        return sum(c[j] * lam[j] * self.symmetrizers[j] for j in range(self.rank))

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"


def _reflect_root(a, roots_c, i):
    # <beta, alpha_i^vee> for beta given in simple-root coordinates
    p = sum(c * a[i][j] for j, c in enumerate(roots_c))
    out = list(roots_c)
    out[i] -= p
    return tuple(out)


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    n = ct.rank
    g = _gram(ct)
    a = [[2 * g[j][i] // g[i][i] for j in range(n)] for i in range(n)]
    assert all(2 * g[j][i] % g[i][i] == 0 for i in range(n) for j in range(n))

    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = _reflect_root(a, beta, i)
                if all(c >= 0 for c in gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    roots = sorted(found, key=lambda r: (sum(r), r))

    def norm2(beta):
        return sum(beta[i] * beta[j] * g[i][j] for i in range(n) for j in range(n))

    coroots = []
    for beta in roots:
        nb = norm2(beta)
        co = []
        for j in range(n):
            num = beta[j] * g[j][j]
            assert num % nb == 0
            co.append(num // nb)
        coroots.append(tuple(co))

    root_weights = tuple(tuple(sum(a[i][j] * beta[j] for j in range(n)) for i in range(n))
                         for beta in roots)

    # greedy descent: move -rho into the dominant chamber by simple reflections
    x = [-1] * n
    word = []
    while True:
        neg = [i for i in range(n) if x[i] < 0]
        if not neg:
            break
        i = neg[0]
        c = x[i]
        x = [x[k] - c * a[k][i] for k in range(n)]
        word.append(i + 1)

    highest = roots[-1]
    phi_vee = coroots[-1]
    h = sum(phi_vee) + 1

    rs = RootSystem(
        cartan_type=ct,
        cartan_matrix=tuple(tuple(r) for r in a),
        gram=tuple(tuple(r) for r in g),
        symmetrizers=tuple(g[i][i] // 2 for i in range(n)),
        positive_roots=tuple(roots),
        positive_coroots=tuple(coroots),
        w0_word=tuple(word),
        highest_short_coroot=phi_vee,
        dual_coxeter=h,
        _inv_cartan=tuple(tuple(r) for r in _invert(a)),
        _root_weights=root_weights,
    )
    assert len(word) == len(roots)
    assert highest == max(roots, key=sum)
    return rs


def build_root_system(ct: CartanType | str) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build(ct)


def parse_weight(s: str, rank: int | None = None) -> Weight:
    """``"4,2"`` -> ``(4, 2)``."""
    try:
        w = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {s!r}") from None
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {s!r} has {len(w)} coordinates, rank is {rank}")
    return w


# --- actions ---------------------------------------------------------------

def _add(x: Sequence[int], y: Sequence[int], c: int = 1) -> Weight:
    return tuple(a + c * b for a, b in zip(x, y))


def pairing(lam: Sequence[int], coroot: Sequence[int]) -> int:
    """<lam, sum c_i alpha_i^vee> = sum c_i lam_i."""
    return sum(c * l for c, l in zip(coroot, lam))


def reflect(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    """Ordinary action of s_i."""
    return _add(lam, rs.simple_root(i), -lam[i - 1])


def simple_dot(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    """s_i o lam = lam - <lam + rho, alpha_i^vee> alpha_i."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"index {i} out of range for rank {rs.rank}")
    return _add(lam, rs.simple_root(i), -(lam[i - 1] + 1))


def weyl_act(rs: RootSystem, word: Sequence[int], lam: Sequence[int]) -> Weight:
    """Ordinary action of s_{w[0]} ... s_{w[-1]} (rightmost letter acts first)."""
    lam = tuple(lam)
    for i in reversed(word):
        lam = reflect(rs, i, lam)
    return lam


def weyl_dot(rs: RootSystem, word: Sequence[int], lam: Sequence[int]) -> Weight:
    """Dot action of s_{w[0]} ... s_{w[-1]} (rightmost letter acts first)."""
    lam = tuple(lam)
    for i in reversed(word):
        lam = simple_dot(rs, i, lam)
    return lam


@dataclass(frozen=True)
class AffineWeylElement:
    """t_mu w, with w given as a word in the simple reflections."""

    translation: Weight
    finite_part: tuple[int, ...] = ()


def affine_dot(rs: RootSystem, g: AffineWeylElement, lam: Sequence[int], ell: int) -> Weight:
    """Level (-ell-h) dot action: (t_mu w) o lam = w o lam - ell mu."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return _add(weyl_dot(rs, g.finite_part, lam), g.translation, -ell)


def star(rs: RootSystem, mu: Sequence[int]) -> Weight:
    """mu* = -w0 mu."""
    return tuple(-x for x in weyl_act(rs, rs.w0_word, mu))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def dominance_leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu <= lam iff lam - mu is a nonnegative integer combination of simple roots."""
    c = rs.to_root_coords(_add(lam, mu, -1))
    return all(x.denominator == 1 and x >= 0 for x in c)


def n_lambda(rs: RootSystem, lam: Sequence[int], ell: int) -> int:
    """Number of positive roots alpha with <lam + rho, alpha^vee> in ell Z."""
    lr = _add(lam, rs.rho)
    return sum(1 for co in rs.positive_coroots if pairing(lr, co) % ell == 0)


def lambda_one(rs: RootSystem, lam: Sequence[int], i: int, ell: int) -> Weight:
    """lam - j alpha_i where <lam + rho, alpha_i^vee> = k ell + j, k >= 1, 0 <= j < ell."""
    p = lam[i - 1] + 1
    if p < ell:
        raise ValueError(f"<lam+rho, alpha_{i}^vee> = {p} is below ell = {ell}")
    return _add(lam, rs.simple_root(i), -(p % ell))


def decompose_restricted(lam: Sequence[int], ell: int) -> tuple[Weight, Weight]:
    """lam = ell*lam1 + lam0 with lam0 ell-restricted."""
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    lam0 = tuple(x % ell for x in lam)
    lam1 = tuple((x - y) // ell for x, y in zip(lam, lam0))
    return lam0, lam1


def is_restricted(lam: Sequence[int], ell: int) -> bool:
    return all(0 <= x < ell for x in lam)


@lru_cache(maxsize=4096)
def _dominant_below(rs: RootSystem, lam: Weight) -> tuple[Weight, ...]:
    # Dominant weights below lam are connected to lam by steps that subtract a
    # single positive root while staying dominant (Stembridge), so a search over
    # those steps reaches all of them.
    roots = rs.root_weights()
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in roots:
            nu = _add(mu, a, -1)
            if nu not in seen and is_dominant(nu):
                seen.add(nu)
                stack.append(nu)
    return tuple(sorted(seen, key=lambda mu: (rs.height(_add(lam, mu, -1)), tuple(-x for x in mu))))


def dominant_below(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """All dominant mu <= lam, ordered by depth below lam (lam first)."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return list(_dominant_below(rs, lam))


def in_alcove(rs: RootSystem, nu: Sequence[int], ell: int) -> bool:
    return (pairing(nu, rs.highest_short_coroot) >= -ell - 1
            and all(x <= -1 for x in nu))


def dominant_conjugate(rs: RootSystem, mu: Sequence[int]) -> Weight:
    """The dominant element of the ordinary W0-orbit of mu."""
    mu = tuple(mu)
    while True:
        for i, x in enumerate(mu):
            if x < 0:
                mu = reflect(rs, i + 1, mu)
                break
        else:
            return mu


def orbit(rs: RootSystem, mu: Sequence[int]) -> list[Weight]:
    """Ordinary W0-orbit of mu."""
    mu = tuple(mu)
    seen = {mu}
    stack = [mu]
    while stack:
        x = stack.pop()
        for i in range(1, rs.rank + 1):
            y = reflect(rs, i, x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def dominant_weights_in_box(rank: int, bound: int) -> list[Weight]:
    """All dominant weights with every coordinate <= bound, lexicographic order."""
    out = [()]
    for _ in range(rank):
        out = [w + (k,) for w in out for k in range(bound + 1)]
    return out
