"""The lcm-lattice, saturation, and the lattice of saturated subsets.

Saturated subsets are masks over the generator indices of a
:class:`~monoring.monomials.GeneratorSet`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Mapping, Sequence

from .complexes import SimplicialComplex
from .errors import NotAnEquivalence
from .monomials import (
    DEFAULT_CAP,
    GeneratorSet,
    Monomial,
    bits,
    check_cap,
    connected_components,
    degree,
    divides,
    is_connected,
    lcm,
    lcm_of,
    popcount,
    restriction,
    shares_factor,
)

LATTICE_CAP = 1 << 16


@dataclass(frozen=True)
class LcmLattice:
    """Distinct lcms of subsets of a monomial set, ordered by divisibility.

    ``elements`` is sorted by (total degree, exponent vector), so it is a
    linear extension of the order and starts with the unit.
    """

    t: int
    elements: tuple
    generators: GeneratorSet | None = None
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {m: i for i, m in enumerate(self.elements)})

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return tuple(m) in self.index

    @property
    def bottom(self) -> Monomial:
        return self.elements[0]

    @property
    def top(self) -> Monomial:
        return self.elements[-1]

    @property
    def atoms(self) -> tuple:
        b = self.bottom
        rest = [m for m in self.elements if m != b]
        return tuple(m for m in rest if not any(o != m and divides(o, m) for o in rest))

    @staticmethod
    def leq(a: Monomial, b: Monomial) -> bool:
        return divides(a, b)

    @staticmethod
    def edge(a: Monomial, b: Monomial) -> bool:
        return shares_factor(a, b)

    def open_interval(self, lo: Monomial, hi: Monomial) -> list:
        return [m for m in self.elements if m != lo and m != hi and divides(lo, m) and divides(m, hi)]


def lcm_closure(monomials: Sequence[Monomial], t: int, cap: int = LATTICE_CAP) -> tuple:
    """All lcms of subsets (the unit included), closed by joining with one monomial at a time."""
    monomials = [tuple(m) for m in monomials]
    seen = {(0,) * t}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in monomials:
                b = lcm(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > cap:
                        check_cap(len(seen), cap, "lcm lattice")
        frontier = nxt
    return tuple(sorted(seen, key=lambda m: (degree(m), m)))


def build_lcm_lattice(M: GeneratorSet, cap: int = LATTICE_CAP) -> LcmLattice:
    return LcmLattice(M.t, lcm_closure(M.gens, M.t, cap), M)


def lattice_from_monomials(monomials: Sequence[Monomial], t: int, cap: int = LATTICE_CAP) -> LcmLattice:
    """Lcm-lattice of an arbitrary monomial set (need not be an antichain)."""
    return LcmLattice(t, lcm_closure(monomials, t, cap), None)


# ---------------------------------------------------------------- saturation

def saturate_once(S: int, M: GeneratorSet) -> int:
    """The one-pass saturation M_N with N the lcms of the components of S."""
    return restriction(M, [lcm_of(C, M) for C in connected_components(S, M)])


def saturate(S: int, M: GeneratorSet) -> int:
    """Smallest saturated superset of S (one-pass saturation iterated to a fixed point)."""
    while True:
        nxt = saturate_once(S, M)
        if nxt == S:
            return S
        S = nxt


def is_saturated(S: int, M: GeneratorSet) -> bool:
    return saturate_once(S, M) == S


def satt_meet(S: int, T: int) -> int:
    return S & T


def satt_join(S: int, T: int, M: GeneratorSet) -> int:
    return saturate(S | T, M)


@dataclass(frozen=True)
class SaturatedFamily:
    """Non-empty saturated subsets of ``M``, ordered by (size, mask)."""

    M: GeneratorSet
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, S):
        return S in set(self.members)

    def with_empty(self) -> tuple:
        return (0,) + self.members

    def below(self, S: int) -> list:
        """Members strictly inside S."""
        return [T for T in self.members if T != S and T & ~S == 0]


def _sort_masks(masks) -> tuple:
    return tuple(sorted(masks, key=lambda s: (popcount(s), s)))


def enumerate_saturated(M: GeneratorSet, cap: int = DEFAULT_CAP) -> SaturatedFamily:
    """Closure generation: start from singletons, repeatedly join with singletons."""
    check_cap(len(M), cap, "enumerate_saturated")
    singles = [saturate(1 << i, M) for i in range(len(M))]
    seen = set(singles)
    frontier = list(seen)
    while frontier:
        nxt = []
        for S in frontier:
            for i in range(len(M)):
                if not S >> i & 1:
                    J = saturate(S | singles[i], M)
                    if J not in seen:
                        seen.add(J)
                        nxt.append(J)
        frontier = nxt
    return SaturatedFamily(M, _sort_masks(seen))


def enumerate_saturated_bruteforce(M: GeneratorSet, cap: int = 16) -> SaturatedFamily:
    check_cap(len(M), cap, "enumerate_saturated_bruteforce")
    return SaturatedFamily(M, _sort_masks(S for S in range(1, 1 << len(M)) if is_saturated(S, M)))


# ---------------------------------------------------------------- order complexes

def order_complex(elements: Sequence[Hashable], less: Callable[[Hashable, Hashable], bool]) -> SimplicialComplex:
    """Complex of chains of a finite poset.

    ``elements`` must be listed along a linear extension of the order.
    """
    n = len(elements)
    ups = []
    for i in range(n):
        up = 0
        for j in range(i + 1, n):
            if less(elements[i], elements[j]):
                up |= 1 << j
        ups.append(up)
    faces = {0}

    def extend(chain, last):
        for j in bits(ups[last]):
            c = chain | (1 << j)
            faces.add(c)
            extend(c, j)

    for i in range(n):
        faces.add(1 << i)
        extend(1 << i, i)
    return SimplicialComplex(tuple(elements), frozenset(faces))


def _proper_subset(a: int, b: int) -> bool:
    return a != b and a & ~b == 0


def interval_order_complex(S: int, M: GeneratorSet) -> SimplicialComplex:
    """Order complex of the open interval (∅, S) in the lattice of saturated subsets.

    Computed from the saturated subsets of S taken as a monomial set of its own;
    vertices are masks over ``M``.
    """
    idx = list(bits(S))
    local = M.restrict_to(S)
    fam = enumerate_saturated(local)

    def to_global(T):
        out = 0
        for j in bits(T):
            out |= 1 << idx[j]
        return out

    inner = [to_global(T) for T in fam if T != local.full]
    return order_complex(inner, _proper_subset)


def lattice_open_interval_complex(L: LcmLattice, lo: Monomial, hi: Monomial) -> SimplicialComplex:
    return order_complex(L.open_interval(lo, hi), lambda a, b: a != b and divides(a, b))


def connected_lattice_part(M: GeneratorSet, L: LcmLattice | None = None) -> list:
    """Lattice elements l != 1 whose divisor set M_l is connected."""
    L = L or build_lcm_lattice(M)
    return [l for l in L if any(l) and is_connected(restriction(M, [l]), M)]


# ---------------------------------------------------------------- equivalences

@dataclass
class EquivalenceReport:
    mapping: dict
    atom_map: dict
    sat_map: dict = None
    sat_bijective: bool | None = None


def apply_equivalence(
    mapping: Mapping[Monomial, Monomial] | Callable[[Monomial], Monomial],
    source: LcmLattice,
    target: LcmLattice | None = None,
) -> EquivalenceReport:
    """Check that ``mapping`` is an isomorphism of partially ordered graphs.

    Raises NotAnEquivalence with a witness. When both lattices carry their
    generator sets, the report includes the induced bijection on atoms
    (generator index to generator index) and on saturated subsets.
    """
    f = mapping if callable(mapping) else (lambda m: mapping.get(m))
    image = {}
    for m in source:
        fm = f(m)
        if fm is None:
            raise NotAnEquivalence("map undefined on lattice element", m)
        image[m] = tuple(fm)
    if len(set(image.values())) != len(image):
        seen = {}
        for m, fm in image.items():
            if fm in seen:
                raise NotAnEquivalence("map not injective", (seen[fm], m))
            seen[fm] = m
    if target is not None and set(image.values()) != set(target.elements):
        extra = set(image.values()) ^ set(target.elements)
        raise NotAnEquivalence("image differs from target lattice", sorted(extra)[0])
    elems = source.elements
    for i, a in enumerate(elems):
        for b in elems[i:]:
            fa, fb = image[a], image[b]
            if divides(a, b) != divides(fa, fb) or divides(b, a) != divides(fb, fa):
                raise NotAnEquivalence("order not preserved", (a, b))
            if a != b and shares_factor(a, b) != shares_factor(fa, fb):
                raise NotAnEquivalence("gcd-graph edge not preserved", (a, b))

    atom_map = {}
    sat_map = None
    sat_bijective = None
    src_gens = source.generators
    tgt_gens = target.generators if target is not None else None
    if src_gens is not None:
        tgt_index = {g: j for j, g in enumerate(tgt_gens.gens)} if tgt_gens is not None else None
        atom_image = [image[g] for g in src_gens.gens]
        for i, fm in enumerate(atom_image):
            atom_map[i] = tgt_index[fm] if tgt_index is not None else fm
        if tgt_gens is not None:
            sat_map = {}
            for S in enumerate_saturated(src_gens):
                T = 0
                for i in bits(S):
                    T |= 1 << atom_map[i]
                sat_map[S] = T
            tgt_sat = set(enumerate_saturated(tgt_gens))
            sat_bijective = set(sat_map.values()) == tgt_sat and len(sat_map) == len(tgt_sat)
    return EquivalenceReport(image, atom_map, sat_map, sat_bijective)
