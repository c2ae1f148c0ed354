"""Monomials as exponent tuples, generator sets, and gcd-graph combinatorics.

A monomial ``x^alpha`` is stored as a plain tuple of non-negative ints.
Subsets of a generator set are int bitmasks over generator indices, bit ``i``
standing for ``gens[i]``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded, DegreeTooLow, EmptyAmbient, ParseError

Monomial = tuple  # tuple[int, ...]

DEFAULT_CAP = 24


def one(t: int) -> Monomial:
    return (0,) * t


def degree(a: Monomial) -> int:
    return sum(a)


def is_squarefree(a: Monomial) -> bool:
    return all(e <= 1 for e in a)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def shares_factor(a: Monomial, b: Monomial) -> bool:
    return any(x and y for x, y in zip(a, b))


def bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceeded(what, n, cap)


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered antichain of monomials with its gcd-graph.

    The input order is the orientation used for every sign downstream.
    Build through :func:`normalize_generators` unless the input is already
    known to be a minimal generating set.
    """

    t: int
    gens: tuple
    names: tuple = None
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        if self.names is None:
            object.__setattr__(self, "names", default_names(self.t))
        adj = []
        for i, a in enumerate(gens):
            nb = 0
            for j, b in enumerate(gens):
                if i != j and shares_factor(a, b):
                    nb |= 1 << j
            adj.append(nb)
        object.__setattr__(self, "adjacency", tuple(adj))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @property
    def full(self) -> int:
        return (1 << len(self.gens)) - 1

    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def subset(self, mask: int) -> list:
        return [self.gens[i] for i in bits(mask)]

    def mask_of(self, monomials: Iterable[Monomial]) -> int:
        index = {g: i for i, g in enumerate(self.gens)}
        mask = 0
        for m in monomials:
            mask |= 1 << index[tuple(m)]
        return mask

    def restrict_to(self, mask: int) -> "GeneratorSet":
        """The generators in ``mask`` as a generator set of their own (same ambient ring)."""
        return GeneratorSet(self.t, tuple(self.subset(mask)), self.names)

    def format(self, a: Monomial) -> str:
        return format_monomial(a, self.names)


def default_names(t: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(t))


def lcm_of(S: int, M: GeneratorSet) -> Monomial:
    if S >> len(M.gens):
        raise IndexError(f"subset mask {S:#b} out of range for {len(M.gens)} generators")
    out = [0] * M.t
    for i in bits(S):
        for k, e in enumerate(M.gens[i]):
            if e > out[k]:
                out[k] = e
    return tuple(out)


def connected_components(S: int, M: GeneratorSet) -> list:
    """Components of the gcd-graph restricted to ``S``, as masks, ordered by lowest index."""
    comps = []
    rest = S
    adj = M.adjacency
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= adj[i]
            nxt &= S & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def n_components(S: int, M: GeneratorSet) -> int:
    return len(connected_components(S, M))


def is_connected(S: int, M: GeneratorSet) -> bool:
    return n_components(S, M) == 1


def is_disconnected(S: int, M: GeneratorSet) -> bool:
    # the empty set has zero components and is not disconnected
    return n_components(S, M) > 1


def is_discrete(S: int, M: GeneratorSet) -> bool:
    return all(not (M.adjacency[i] & S) for i in bits(S))


def normalize_generators(raw: Sequence[Monomial], t: int | None = None, names=None) -> GeneratorSet:
    """Minimal generating set of the ideal generated by ``raw``.

    Duplicates and non-minimal elements are dropped; survivors keep input order.
    Raises DegreeTooLow if a minimal generator has degree below 2.
    """
    raw = [tuple(int(e) for e in m) for m in raw]
    if t is None:
        if not raw:
            raise EmptyAmbient("cannot infer the number of variables from an empty list")
        t = len(raw[0])
    if any(len(m) != t for m in raw):
        raise ParseError(f"monomials must all have {t} exponents")
    if any(e < 0 for m in raw for e in m):
        raise ParseError("exponents must be non-negative")
    if t == 0 and raw:
        raise EmptyAmbient("ambient ring has no variables")
    uniq = list(dict.fromkeys(raw))
    gens = [m for m in uniq if not any(o != m and divides(o, m) for o in uniq)]
    for m in gens:
        if degree(m) < 2:
            raise DegreeTooLow(f"minimal generator {format_monomial(m, names or default_names(t))} has degree {degree(m)} < 2")
    return GeneratorSet(t, tuple(gens), tuple(names) if names is not None else None)


def restriction(M: GeneratorSet, N: Iterable[Monomial]) -> int:
    """Mask of the generators dividing some monomial of ``N`` (the set M_N)."""
    N = [tuple(n) for n in N]
    mask = 0
    for i, g in enumerate(M.gens):
        if any(divides(g, n) for n in N):
            mask |= 1 << i
    return mask


def discrete_subsets(M: GeneratorSet, cap: int = DEFAULT_CAP):
    """All non-empty discrete subsets (pairwise coprime) and the independence number g."""
    check_cap(len(M), cap, "discrete_subsets")
    out = []

    def grow(mask, start):
        for i in range(start, len(M)):
            if not (M.adjacency[i] & mask):
                new = mask | (1 << i)
                out.append(new)
                grow(new, i + 1)

    grow(0, 0)
    out.sort(key=lambda s: (popcount(s), s))
    g = max((popcount(s) for s in out), default=0)
    return out, g


# ---------------------------------------------------------------- text forms

_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse ``x1^2*x3`` or a JSON exponent vector ``[2,0,1]``."""
    text = text.strip()
    t = len(names)
    if text.startswith("["):
        try:
            vec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad exponent vector {text!r}: {exc.msg}") from None
        if len(vec) != t or not all(isinstance(e, int) and e >= 0 for e in vec):
            raise ParseError(f"exponent vector {text!r} must have {t} non-negative ints")
        return tuple(vec)
    if text == "1":
        return one(t)
    index = {n: i for i, n in enumerate(names)}
    out = [0] * t
    for part in text.split("*"):
        m = _TOKEN.match(part)
        if not m:
            raise ParseError(f"cannot parse factor {part!r} in {text!r}")
        name, exp = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}")
        out[index[name]] += int(exp) if exp is not None else 1
    return tuple(out)


def format_monomial(a: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
