"""Exact Laurent polynomials in v = t^(1/2) with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable element of Z[v, v^-1].

    Stored as a map exponent -> nonzero int.  Python ints are unbounded, so
    coefficient growth is never an issue.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    # ring operations

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly._raw({e * n: c ** (-n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # involution and helpers

    def bar(self) -> "LaurentPoly":
        """v -> v^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def pos_part(self) -> "LaurentPoly":
        """Terms with strictly positive exponent."""
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e > 0})

    def eval_one(self) -> int:
        return sum(self._terms.values())

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # serialization

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)

    def __repr__(self):
        return f"LaurentPoly({self.items()!r})"

    def __str__(self):
        return format_poly(self)


def _mono(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    var = "v" if e == 1 else f"v^{e}"
    if c == 1:
        return var
    if c == -1:
        return "-" + var
    return f"{c}{var}"


def format_poly(p: LaurentPoly) -> str:
    """Human-readable form, highest power first, e.g. ``v^2 - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p._terms.items(), reverse=True):
        if not parts:
            parts.append(_mono(c, e))
        elif c < 0:
            parts.append("- " + _mono(-c, e))
        else:
            parts.append("+ " + _mono(c, e))
    return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
VINV = LaurentPoly.monomial(-1)


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def lp_bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def lp_pos_part(a: LaurentPoly) -> LaurentPoly:
    return a.pos_part()


def lp_eval_one(a: LaurentPoly) -> int:
    return a.eval_one()
