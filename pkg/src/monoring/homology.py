"""Exact ranks over Q and GF(p), reduced homology, and Laurent generating functions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

from .errors import MonoringError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise MonoringError(f"{p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("rational", "rationals", "q", "qq", "0"):
            return cls(0)
        if text.startswith("gf:") or text.startswith("gf("):
            digits = text[3:].rstrip(")")
            try:
                return cls(int(digits))
            except ValueError:
                raise MonoringError(f"bad field {text!r}") from None
        raise MonoringError(f"unknown field {text!r}; use 'rational' or 'gf:<p>'")

    def __str__(self):
        return "rational" if self.characteristic == 0 else f"gf:{self.characteristic}"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


# ---------------------------------------------------------------- ranks

def _as_sparse(row) -> dict:
    if isinstance(row, Mapping):
        return {c: v for c, v in row.items() if v}
    return {c: v for c, v in enumerate(row) if v}


def rank(rows: Sequence, field: FieldSpec = RATIONALS) -> int:
    """Exact rank of a matrix given as rows (dense sequences or ``{col: value}`` dicts).

    Rows are inserted one at a time into an echelon table keyed by leading
    column. Over Q elimination is fraction-free: integer cross-multiplication
    followed by division by the row content.
    """
    p = field.characteristic
    if p == 2:
        return _rank_gf2(rows)
    if p:
        return _rank_modp(rows, p)
    return _rank_integer(rows)


def _rank_gf2(rows) -> int:
    pivots = {}
    r = 0
    for row in rows:
        v = 0
        for c, x in _as_sparse(row).items():
            if x % 2:
                v |= 1 << c
        while v:
            low = v & -v
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                r += 1
                break
            v ^= piv
    return r


def _rank_modp(rows, p) -> int:
    pivots = {}
    r = 0
    for row in rows:
        v = {c: x % p for c, x in _as_sparse(row).items() if x % p}
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(v[c], -1, p)
                pivots[c] = {k: x * inv % p for k, x in v.items()}
                r += 1
                break
            f = v[c]
            for k, x in piv.items():
                y = (v.get(k, 0) - f * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r


def _rank_integer(rows) -> int:
    pivots = {}
    r = 0
    for row in rows:
        v = _as_sparse(row)
        while v:
            c = min(v)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = v
                r += 1
                break
            a, b = piv[c], v[c]
            if a == 1 or a == -1:
                f = b * a
                for k, x in piv.items():
                    y = v.get(k, 0) - f * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
                continue
            g = gcd(a, b)
            a, b = a // g, b // g
            nv = {}
            for k in v.keys() | piv.keys():
                y = a * v.get(k, 0) - b * piv.get(k, 0)
                if y:
                    nv[k] = y
            content = 0
            for x in nv.values():
                content = gcd(content, x)
                if content == 1:
                    break
            if content > 1:
                nv = {k: x // content for k, x in nv.items()}
            v = nv
    return r


# ---------------------------------------------------------------- generating functions

class LaurentGF:
    """Integer Laurent polynomial in z, finitely supported, stored as ``{exponent: coeff}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentGF":
        return cls({exponent: coeff})

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentGF({0: other})
        return isinstance(other, LaurentGF) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentGF") -> "LaurentGF":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentGF(out)

    def __neg__(self):
        return LaurentGF({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentGF({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentGF(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentGF":
        """Multiply by z^k."""
        return LaurentGF({e + k: c for e, c in self.coeffs.items()})

    def reflect(self) -> "LaurentGF":
        """Substitute z -> 1/z."""
        return LaurentGF({-e: c for e, c in self.coeffs.items()})

    def min_degree(self):
        return min(self.coeffs) if self.coeffs else None

    def max_degree(self):
        return max(self.coeffs) if self.coeffs else None

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "LaurentGF(0)"
        parts = []
        for e, c in self.items():
            parts.append(f"{c}" if e == 0 else f"{c}*z^{e}")
        return "LaurentGF(" + " + ".join(parts) + ")"


def reduced_homology_dims(delta, field: FieldSpec = RATIONALS) -> dict:
    """``{i: dim H~_i}`` for ``i >= -1``, zero entries omitted."""
    from .complexes import chain_complex

    cc = chain_complex(delta, field)
    ranks = {i: rank(rows, field) for i, rows in cc.boundaries.items()}
    dims = {}
    for i, basis in cc.bases.items():
        d = len(basis) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        assert d >= 0, "negative homology dimension"
        if d:
            dims[i] = d
    return dims


def reduced_homology_gf(delta, field: FieldSpec = RATIONALS) -> LaurentGF:
    """Generating function sum_i dim H~_i(delta; k) z^i; the void complex gives 0."""
    return LaurentGF(reduced_homology_dims(delta, field))
