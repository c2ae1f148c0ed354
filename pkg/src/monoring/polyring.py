"""Exact polynomials and truncated power series in Z[x_1..x_t, z].

Terms are keyed by ``(alpha, zdeg)`` with ``alpha`` an exponent tuple.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .errors import BoundMismatch, ConstantTermNotOne, UnmappedMonomial
from .monomials import default_names, degree, format_monomial, product


class MultiPoly:
    __slots__ = ("t", "terms")

    def __init__(self, t: int, terms: Mapping | Iterable = ()):
        self.t = t
        acc = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (alpha, z), c in items:
            key = (tuple(alpha), int(z))
            acc[key] = acc.get(key, 0) + c
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def one(cls, t: int) -> "MultiPoly":
        return cls(t, {((0,) * t, 0): 1})

    @classmethod
    def term(cls, t: int, alpha, z: int, coeff: int = 1) -> "MultiPoly":
        return cls(t, {(tuple(alpha), z): coeff})

    @classmethod
    def koszul(cls, t: int) -> "MultiPoly":
        """The product of (1 + x_i z) over all variables."""
        out = cls.one(t)
        for i in range(t):
            e = tuple(int(j == i) for j in range(t))
            out = out * cls(t, {((0,) * t, 0): 1, (e, 1): 1})
        return out

    def copy(self):
        return self.__class__(self.t, dict(self.terms))

    def _check(self, other):
        if other.t != self.t:
            raise BoundMismatch(f"variable counts differ: {self.t} vs {other.t}")

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.t == other.t and self.terms == other.terms

    def __hash__(self):
        return hash((self.t, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly(self.t, out)

    def __neg__(self):
        return MultiPoly(self.t, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.t, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = {}
        for (a1, z1), c1 in self.terms.items():
            for (a2, z2), c2 in other.terms.items():
                k = (product(a1, a2), z1 + z2)
                out[k] = out.get(k, 0) + c1 * c2
        return MultiPoly(self.t, out)

    __rmul__ = __mul__

    def coefficient(self, alpha, z: int) -> int:
        return self.terms.get((tuple(alpha), z), 0)

    def z_degree(self) -> int:
        return max((z for _, z in self.terms), default=-1)

    def min_z_degree(self):
        return min((z for _, z in self.terms), default=None)

    def is_polynomial(self) -> bool:
        """No negative z-exponents."""
        return all(z >= 0 for _, z in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(((0,) * self.t, 0), 0)

    def truncate(self, max_z: int, max_deg: int) -> "MultiPoly":
        return MultiPoly(self.t, {k: c for k, c in self.terms.items() if k[1] <= max_z and degree(k[0]) <= max_deg})

    def filter(self, keep: Callable) -> "MultiPoly":
        return MultiPoly(self.t, {k: c for k, c in self.terms.items() if keep(*k)})

    def z_coefficients(self) -> dict:
        """Regarded as a polynomial in z: ``{zdeg: MultiPoly in x}``."""
        out = {}
        for (a, z), c in self.terms.items():
            out.setdefault(z, {})[(a, 0)] = c
        return {z: MultiPoly(self.t, d) for z, d in out.items()}

    def evaluate_x_at_one(self) -> dict:
        """``{zdeg: coeff}`` of p(1, ..., 1, z)."""
        out = {}
        for (_, z), c in self.terms.items():
            out[z] = out.get(z, 0) + c
        return {z: c for z, c in out.items() if c}

    def sorted_terms(self) -> list:
        """Canonical order: z-degree ascending, then exponent vectors lexicographically descending."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], tuple(-e for e in kv[0][0])))

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(self.t)
        if not self.terms:
            return "0"
        out = []
        for i, ((alpha, z), c) in enumerate(self.sorted_terms()):
            factors = []
            mono = format_monomial(alpha, names)
            if mono != "1":
                factors.append(mono)
            if z == 1:
                factors.append("z")
            elif z:
                factors.append(f"z^{z}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r})"

    def to_json(self) -> dict:
        return {"terms": [{"alpha": list(a), "z": z, "coeff": c} for (a, z), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, t: int, data: Mapping) -> "MultiPoly":
        return cls(t, {(tuple(d["alpha"]), d["z"]): d["coeff"] for d in data["terms"]})


class TruncatedSeries(MultiPoly):
    """A MultiPoly that silently discards terms beyond (max z-degree, max total x-degree)."""

    __slots__ = ("max_z", "max_deg")

    def __init__(self, t: int, terms=(), max_z: int = 8, max_deg: int = 8):
        self.max_z = max_z
        self.max_deg = max_deg
        super().__init__(t, terms)
        self.terms = {k: c for k, c in self.terms.items() if k[1] <= max_z and degree(k[0]) <= max_deg}

    @classmethod
    def from_poly(cls, p: MultiPoly, max_z: int, max_deg: int) -> "TruncatedSeries":
        return cls(p.t, p.terms, max_z, max_deg)

    def _bounds(self, other):
        if isinstance(other, TruncatedSeries):
            if (other.max_z, other.max_deg) != (self.max_z, self.max_deg):
                raise BoundMismatch(
                    f"truncation bounds differ: {(self.max_z, self.max_deg)} vs {(other.max_z, other.max_deg)}"
                )

    def _wrap(self, p: MultiPoly) -> "TruncatedSeries":
        return TruncatedSeries(p.t, p.terms, self.max_z, self.max_deg)

    def copy(self):
        return self._wrap(self)

    def __add__(self, other):
        self._bounds(other)
        return self._wrap(MultiPoly.__add__(self, other))

    def __neg__(self):
        return self._wrap(MultiPoly.__neg__(self))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._wrap(MultiPoly.__mul__(self, other))
        self._bounds(other)
        self._check(other)
        max_z, max_deg = self.max_z, self.max_deg
        out = {}
        for (a1, z1), c1 in self.terms.items():
            d1 = degree(a1)
            for (a2, z2), c2 in other.terms.items():
                z = z1 + z2
                if z > max_z or d1 + degree(a2) > max_deg:
                    continue
                k = (product(a1, a2), z)
                out[k] = out.get(k, 0) + c1 * c2
        return TruncatedSeries(self.t, out, max_z, max_deg)

    __rmul__ = __mul__

    def __repr__(self):
        return f"TruncatedSeries({self.to_str()!r}, max_z={self.max_z}, max_deg={self.max_deg})"


def invert_truncated(p: MultiPoly, max_z: int, max_deg: int) -> TruncatedSeries:
    """Inverse of p as a truncated series via the geometric series in (1 - p).

    p must have constant term 1 and no other z^0 terms, so powers of
    (1 - p) gain z-order and the sum is finite.
    """
    t = p.t
    unit = ((0,) * t, 0)
    if p.terms.get(unit) != 1:
        raise ConstantTermNotOne(f"constant term is {p.terms.get(unit, 0)}, expected 1")
    if any(k[1] < 1 for k in p.terms if k != unit):
        raise ConstantTermNotOne("p - 1 must have z-order at least 1")
    q = TruncatedSeries(t, {k: -c for k, c in p.terms.items() if k != unit}, max_z, max_deg)
    result = TruncatedSeries(t, {unit: 1}, max_z, max_deg)
    power = result
    while True:
        power = power * q
        if not power:
            return result
        result = result + power


def substitute_variables(
    p: MultiPoly,
    f: Mapping | Callable,
    target_t: int | None = None,
) -> MultiPoly:
    """Replace every x-monomial coefficient of p (p read as a polynomial in z) by its image under f."""
    get = f if callable(f) else (lambda a: f.get(a))
    out = {}
    t2 = target_t
    for (alpha, z), c in p.terms.items():
        img = get(alpha)
        if img is None:
            raise UnmappedMonomial(f"no image for monomial {alpha}")
        img = tuple(img)
        if t2 is None:
            t2 = len(img)
        key = (img, z)
        out[key] = out.get(key, 0) + c
    return MultiPoly(t2 if t2 is not None else p.t, out)


def evaluation_at_one(alpha) -> tuple:
    """Map for substitute_variables sending every x-monomial to 1 in a one-variable-free ring."""
    return ()
