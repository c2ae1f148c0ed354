"""Finite simplicial complexes with faces stored explicitly as vertex bitmasks.

Bit ``j`` of a face mask is ``vertices[j]``. The void complex (no faces) and
the complex ``{∅}`` are different values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .errors import MonoringError
from .monomials import GeneratorSet, bits, check_cap, connected_components, lcm, popcount, DEFAULT_CAP


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    faces: frozenset

    @classmethod
    def from_predicate(cls, vertices: Sequence[Hashable], pred: Callable[[int], bool]) -> "SimplicialComplex":
        n = len(vertices)
        return cls(tuple(vertices), frozenset(F for F in range(1 << n) if pred(F)))

    @classmethod
    def from_facets(cls, vertices: Sequence[Hashable], facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        index = {v: i for i, v in enumerate(vertices)}
        faces = set()
        for facet in facets:
            top = 0
            for v in facet:
                top |= 1 << index[v]
            sub = top
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return cls(tuple(vertices), frozenset(faces))

    @classmethod
    def simplex(cls, vertices: Sequence[Hashable]) -> "SimplicialComplex":
        return cls.from_predicate(vertices, lambda F: True)

    @classmethod
    def void(cls, vertices: Sequence[Hashable] = ()) -> "SimplicialComplex":
        return cls(tuple(vertices), frozenset())

    @property
    def n(self) -> int:
        return len(self.vertices)

    def is_void(self) -> bool:
        return not self.faces

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def dim(self) -> int:
        return max((popcount(F) - 1 for F in self.faces), default=-2)

    def faces_of_dim(self, i: int) -> list:
        return sorted(F for F in self.faces if popcount(F) == i + 1)

    def is_downward_closed(self) -> bool:
        for F in self.faces:
            for v in bits(F):
                if F & ~(1 << v) not in self.faces:
                    return False
        return True

    def face_labels(self, F: int) -> tuple:
        return tuple(self.vertices[j] for j in bits(F))

    def labelled_faces(self) -> list:
        return [self.face_labels(F) for F in sorted(self.faces, key=lambda F: (popcount(F), F))]


# ---------------------------------------------------------------- operations

def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    full = (1 << delta.n) - 1
    return SimplicialComplex.from_predicate(delta.vertices, lambda F: (full & ~F) not in delta.faces)


def _disjoint(d1: SimplicialComplex, d2: SimplicialComplex) -> None:
    overlap = set(d1.vertices) & set(d2.vertices)
    if overlap:
        raise MonoringError(f"vertex sets overlap: {sorted(map(repr, overlap))}")


def join(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    _disjoint(d1, d2)
    shift = d1.n
    faces = frozenset(F1 | (F2 << shift) for F1 in d1.faces for F2 in d2.faces)
    return SimplicialComplex(d1.vertices + d2.vertices, faces)


def dual_join(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    """Faces F of the union with F∩V1 in d1 or F∩V2 in d2."""
    _disjoint(d1, d2)
    shift = d1.n
    low = (1 << shift) - 1
    return SimplicialComplex.from_predicate(
        d1.vertices + d2.vertices,
        lambda F: (F & low) in d1.faces or (F >> shift) in d2.faces,
    )


def dual_join_via_duals(d1: SimplicialComplex, d2: SimplicialComplex) -> SimplicialComplex:
    return alexander_dual(join(alexander_dual(d1), alexander_dual(d2)))


# ---------------------------------------------------------------- monomial complexes

def _subset_tables(S: int, M: GeneratorSet):
    """lcm and component structure for every local sub-mask of S."""
    idx = list(bits(S))
    k = len(idx)
    local = GeneratorSet(M.t, tuple(M.gens[i] for i in idx), M.names)
    lcms = [None] * (1 << k)
    lcms[0] = (0,) * M.t
    for F in range(1, 1 << k):
        low = F & -F
        lcms[F] = lcm(lcms[F ^ low], local.gens[low.bit_length() - 1])
    return idx, local, lcms


def delta(S: int, M: GeneratorSet, cap: int = DEFAULT_CAP) -> SimplicialComplex:
    """Faces F ⊆ S with lcm(F) != lcm(S) or F disconnected; vertices are generator indices."""
    if not S:
        raise MonoringError("delta needs a non-empty subset")
    idx, local, lcms = _subset_tables(S, M)
    check_cap(len(idx), cap, "delta")
    top = lcms[-1]
    return SimplicialComplex.from_predicate(
        tuple(idx), lambda F: lcms[F] != top or len(connected_components(F, local)) > 1
    )


def delta_prime(S: int, M: GeneratorSet, cap: int = DEFAULT_CAP) -> SimplicialComplex:
    """Like :func:`delta` but disconnectedness is tested inside each component of S."""
    if not S:
        raise MonoringError("delta_prime needs a non-empty subset")
    idx, local, lcms = _subset_tables(S, M)
    check_cap(len(idx), cap, "delta_prime")
    top = lcms[-1]
    comps = connected_components(local.full, local)

    def pred(F):
        if lcms[F] != top:
            return True
        return any(len(connected_components(F & C, local)) > 1 for C in comps)

    return SimplicialComplex.from_predicate(tuple(idx), pred)


def relabel(delta_: SimplicialComplex, mapping) -> SimplicialComplex:
    return SimplicialComplex(tuple(mapping(v) for v in delta_.vertices), delta_.faces)


# ---------------------------------------------------------------- chains

@dataclass
class ChainComplexOverField:
    """Augmented simplicial chain complex.

    ``bases[i]`` lists the i-faces (masks, ascending); the empty face is the
    single basis element of degree -1. ``boundaries[i]`` has one sparse row
    per i-face, keyed by position in ``bases[i-1]``.
    """

    bases: dict
    boundaries: dict
    field: object = None

    def matrix(self, i: int) -> list:
        """Dense matrix of the boundary from degree i to i-1 (rows = (i-1)-faces)."""
        src = self.bases.get(i, [])
        tgt = self.bases.get(i - 1, [])
        out = [[0] * len(src) for _ in tgt]
        for col, row in enumerate(self.boundaries.get(i, [])):
            for r, v in row.items():
                out[r][col] = v
        return out

    def check_d_squared(self) -> bool:
        for i, rows in self.boundaries.items():
            lower = self.boundaries.get(i - 1)
            if not lower:
                continue
            for row in rows:
                acc = {}
                for r, v in row.items():
                    for r2, w in lower[r].items():
                        acc[r2] = acc.get(r2, 0) + v * w
                if any(acc.values()):
                    return False
        return True


def chain_complex(delta_: SimplicialComplex, field=None) -> ChainComplexOverField:
    bases = {}
    for F in sorted(delta_.faces, key=lambda F: (popcount(F), F)):
        bases.setdefault(popcount(F) - 1, []).append(F)
    index = {F: pos for faces in bases.values() for pos, F in enumerate(faces)}
    boundaries = {}
    for i, faces in bases.items():
        if i < 0:
            continue
        rows = []
        for F in faces:
            row = {}
            for j, v in enumerate(bits(F)):
                row[index[F & ~(1 << v)]] = -1 if j % 2 else 1
            rows.append(row)
        boundaries[i] = rows
    return ChainComplexOverField(bases, boundaries, field)
