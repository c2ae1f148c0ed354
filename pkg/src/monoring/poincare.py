"""The Poincaré-series denominator b_R(x, z) of a monomial ring and its companions.

``denominator`` evaluates the sum over saturated subsets with the homology of
Δ'_S. Two further routes compute the same polynomial: the open intervals of
the saturated-subset lattice, and the product over square-free deviations.
Non-square-free ideals are polarized first and the result mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .complexes import delta, delta_prime
from .errors import NotSquareFree, NotTaylorMinimal
from .homology import RATIONALS, FieldSpec, LaurentGF, reduced_homology_gf
from .lattices import (
    LcmLattice,
    apply_equivalence,
    build_lcm_lattice,
    connected_lattice_part,
    enumerate_saturated,
    interval_order_complex,
    lattice_open_interval_complex,
    order_complex,
)
from .monomials import (
    DEFAULT_CAP,
    GeneratorSet,
    check_cap,
    connected_components,
    discrete_subsets,
    divides,
    is_squarefree,
    lcm_of,
    popcount,
    restriction,
)
from .polyring import MultiPoly, TruncatedSeries, invert_truncated, substitute_variables


def _sat_sum(M: GeneratorSet, homology: Callable[[int], LaurentGF]) -> MultiPoly:
    """1 + sum over S in Sat(M) of m_S (-z)^(c(S)+2) H(S)(z)."""
    terms = {((0,) * M.t, 0): 1}
    for S in enumerate_saturated(M):
        c = len(connected_components(S, M))
        sign = -1 if c % 2 else 1
        mS = lcm_of(S, M)
        for e, dim in homology(S).items():
            z = e + c + 2
            key = (mS, z)
            terms[key] = terms.get(key, 0) + sign * dim
    out = MultiPoly(M.t, terms)
    assert out.is_polynomial(), f"negative z-power left in denominator: {out}"
    return out


def formula_sum(M: GeneratorSet, field: FieldSpec = RATIONALS) -> MultiPoly:
    """The saturated-subset sum with H~(Δ'_S), evaluated directly on M whatever its exponents."""
    return _sat_sum(M, lambda S: reduced_homology_gf(delta_prime(S, M), field))


def interval_sum(M: GeneratorSet, field: FieldSpec = RATIONALS) -> MultiPoly:
    """The same sum with the homology of the open interval (∅, S) of saturated subsets."""
    return _sat_sum(M, lambda S: reduced_homology_gf(interval_order_complex(S, M), field))


def _through_polarization(M: GeneratorSet, route: Callable) -> MultiPoly:
    if M.is_squarefree():
        return route(M)
    pol = polarize(M)
    return substitute_variables(route(pol.generators), pol.lattice_map, M.t)


def denominator(M: GeneratorSet, field: FieldSpec = RATIONALS) -> MultiPoly:
    """b_R(x, z) for R = k[x]/(M)."""
    return _through_polarization(M, lambda N: formula_sum(N, field))


def denominator_via_intervals(M: GeneratorSet, field: FieldSpec = RATIONALS) -> MultiPoly:
    return _through_polarization(M, lambda N: interval_sum(N, field))


# ---------------------------------------------------------------- deviations

@dataclass
class DeviationTable:
    """Square-free multigraded deviations eps[(i, alpha)] and p_alpha(z) = sum_i eps z^i."""

    t: int
    eps: dict
    p: dict

    def epsilon(self, i: int, alpha) -> int:
        return self.eps.get((i, tuple(alpha)), 0)


def _require_squarefree(M: GeneratorSet) -> None:
    if not M.is_squarefree():
        bad = next(g for g in M.gens if not is_squarefree(g))
        raise NotSquareFree(f"generator {M.format(bad)} is not square-free")


def squarefree_deviations(M: GeneratorSet, field: FieldSpec = RATIONALS, lattice: LcmLattice | None = None) -> DeviationTable:
    """eps_{i,alpha} = dim H~_{i-3}(Δ_{M_alpha}) for x^alpha in L_I and i >= 2; eps_{1,e_i} = 1."""
    _require_squarefree(M)
    L = lattice or build_lcm_lattice(M)
    eps = {}
    p = {}
    for i in range(M.t):
        e = tuple(int(j == i) for j in range(M.t))
        eps[(1, e)] = 1
        p[e] = LaurentGF({1: 1})
    for alpha in L:
        if not any(alpha):
            continue
        pa = reduced_homology_gf(delta(restriction(M, [alpha]), M), field).shift(3)
        p[alpha] = pa
        for i, dim in pa.items():
            eps[(i, alpha)] = dim
    return DeviationTable(M.t, eps, p)


def denominator_via_deviations(M: GeneratorSet, field: FieldSpec = RATIONALS) -> MultiPoly:
    """Product of (1 - x^alpha p_alpha(z)) over the connected part of L_I, modulo squares of variables."""
    _require_squarefree(M)
    L = build_lcm_lattice(M)
    dev = squarefree_deviations(M, field, L)
    out = MultiPoly.one(M.t)
    sqfree = lambda alpha, z: is_squarefree(alpha)
    for alpha in connected_lattice_part(M, L):
        factor = MultiPoly(M.t, {((0,) * M.t, 0): 1})
        factor = factor - MultiPoly(M.t, {(alpha, e): c for e, c in dev.p[alpha].items()})
        out = (out * factor).filter(sqfree)
    return out


def product_representation(dev: DeviationTable, max_z: int, max_deg: int) -> TruncatedSeries:
    """prod (1 + x^a z^(2i-1))^eps_(2i-1,a) / (1 - x^a z^(2i))^eps_(2i,a), truncated."""
    t = dev.t
    unit = ((0,) * t, 0)
    out = TruncatedSeries(t, {unit: 1}, max_z, max_deg)
    for (i, alpha), n in sorted(dev.eps.items()):
        if i % 2:
            factor = TruncatedSeries(t, {unit: 1, (alpha, i): 1}, max_z, max_deg)
        else:
            factor = invert_truncated(MultiPoly(t, {unit: 1, (alpha, i): -1}), max_z, max_deg)
        for _ in range(n):
            out = out * factor
    return out


def poincare_series(M: GeneratorSet, field: FieldSpec = RATIONALS, max_z: int = 8, max_deg: int = 8) -> TruncatedSeries:
    """P^R_k(x, z) = prod(1 + x_i z) / b_R(x, z), truncated."""
    num = TruncatedSeries.from_poly(MultiPoly.koszul(M.t), max_z, max_deg)
    return num * invert_truncated(denominator(M, field), max_z, max_deg)


# ---------------------------------------------------------------- polarization

@dataclass
class PolarizationResult:
    """Square-free copy of M over variables x_{i,j}, ordered by (i, j).

    ``lattice_map`` sends each element of the polarized lcm-lattice to the
    element of L_I it corresponds to; ``forward`` sends generators m to m'.
    """

    source: GeneratorSet
    generators: GeneratorSet
    variables: list
    forward: dict
    lattice_map: dict
    source_lattice: LcmLattice = field(repr=False, default=None)
    target_lattice: LcmLattice = field(repr=False, default=None)

    def collapse(self, alpha) -> tuple:
        """Monomial map x_{i,j} -> x_i."""
        out = [0] * self.source.t
        for (i, _), e in zip(self.variables, alpha):
            out[i] += e
        return tuple(out)


def polarize(M: GeneratorSet, validate: bool = True) -> PolarizationResult:
    t = M.t
    depth = [max([g[i] for g in M.gens], default=0) for i in range(t)]
    variables = [(i, j) for i in range(t) for j in range(1, max(depth[i], 1) + 1)]
    pos = {v: k for k, v in enumerate(variables)}
    names = [f"{M.names[i]}_{j}" for i, j in variables]

    def lift(alpha):
        out = [0] * len(variables)
        for i, a in enumerate(alpha):
            for j in range(1, a + 1):
                out[pos[(i, j)]] = 1
        return tuple(out)

    forward = {g: lift(g) for g in M.gens}
    P = GeneratorSet(len(variables), tuple(forward[g] for g in M.gens), tuple(names))
    Lp = build_lcm_lattice(P)
    L = build_lcm_lattice(M)

    def down(beta):
        out = [0] * t
        for (i, j), b in zip(variables, beta):
            if b and j > out[i]:
                out[i] = j
        return tuple(out)

    lattice_map = {beta: down(beta) for beta in Lp}
    if validate:
        apply_equivalence(lattice_map, Lp, L)
    return PolarizationResult(M, P, variables, forward, lattice_map, L, Lp)


# ---------------------------------------------------------------- Betti numbers and Golod rings

def betti_numerator(M: GeneratorSet, field: FieldSpec = RATIONALS, lattice: LcmLattice | None = None) -> MultiPoly:
    """P^Q_R(x, z) = 1 + sum over 1 != m in L_I of m z^2 H~((1, m)_L)(z)."""
    L = lattice or build_lcm_lattice(M)
    terms = {(L.bottom, 0): 1}
    for m in L:
        if m == L.bottom:
            continue
        for e, dim in reduced_homology_gf(lattice_open_interval_complex(L, L.bottom, m), field).items():
            terms[(m, e + 2)] = terms.get((m, e + 2), 0) + dim
    return MultiPoly(M.t, terms)


def is_taylor_minimal(M: GeneratorSet, cap: int = DEFAULT_CAP) -> bool:
    check_cap(len(M), cap, "is_taylor_minimal")
    seen = set()
    for S in range(1 << len(M)):
        m = lcm_of(S, M)
        if m in seen:
            return False
        seen.add(m)
    return True


def taylor_closed_form(M: GeneratorSet, cap: int = DEFAULT_CAP) -> MultiPoly:
    """sum over all S of (-1)^c(S) z^(|S|+c(S)) m_S, valid when the Taylor complex is minimal."""
    if not is_taylor_minimal(M, cap):
        raise NotTaylorMinimal("two subsets share an lcm")
    terms = {}
    for S in range(1 << len(M)):
        c = len(connected_components(S, M))
        key = (lcm_of(S, M), popcount(S) + c)
        terms[key] = terms.get(key, 0) + (-1) ** c
    return MultiPoly(M.t, terms)


def golod_rhs(M: GeneratorSet, field: FieldSpec = RATIONALS) -> MultiPoly:
    """1 - z (P^Q_R - 1), the denominator a Golod ring would have."""
    one = MultiPoly.one(M.t)
    z = MultiPoly.term(M.t, (0,) * M.t, 1)
    return one - z * (betti_numerator(M, field) - one)


def is_golod(M: GeneratorSet, field: FieldSpec = RATIONALS) -> bool:
    return denominator(M, field) == golod_rhs(M, field)


def pre_golod_sides(N: GeneratorSet, field: FieldSpec = RATIONALS):
    """Both sides of the pre-Golod equation: H~(L_N minus {1, m_N}) and the saturated-interval sum."""
    L = build_lcm_lattice(N)
    inner = [m for m in L if m != L.bottom and m != L.top]
    left = reduced_homology_gf(order_complex(inner, lambda a, b: a != b and divides(a, b)), field)
    top = lcm_of(N.full, N)
    right = LaurentGF()
    for S in enumerate_saturated(N):
        if lcm_of(S, N) != top:
            continue
        c = len(connected_components(S, N))
        sign = -1 if (c - 1) % 2 else 1
        right = right + reduced_homology_gf(interval_order_complex(S, N), field).shift(c - 1) * sign
    return left, right


def is_pre_golod(N: GeneratorSet, field: FieldSpec = RATIONALS) -> bool:
    left, right = pre_golod_sides(N, field)
    return left == right


def pre_golod_failures(M: GeneratorSet, field: FieldSpec = RATIONALS) -> list:
    """Lattice elements m != 1 for which M_m is not pre-Golod."""
    L = build_lcm_lattice(M)
    return [m for m in L if m != L.bottom and not is_pre_golod(M.restrict_to(restriction(M, [m])), field)]


def golod_via_criterion(M: GeneratorSet, field: FieldSpec = RATIONALS) -> bool:
    return not pre_golod_failures(M, field)


# ---------------------------------------------------------------- degree bound

@dataclass
class DegreeStats:
    n: int
    g: int
    degree: int
    is_complete_intersection: bool


def degree_stats(M: GeneratorSet, field: FieldSpec = RATIONALS) -> DegreeStats:
    """z-degree of b_R(1, ..., 1, z) against the bound n + g."""
    n = len(M)
    _, g = discrete_subsets(M)
    at_one = denominator(M, field).evaluate_x_at_one()
    deg = max(at_one, default=0)
    assert deg <= n + g <= 2 * n, f"degree {deg} exceeds n + g = {n + g}"
    return DegreeStats(n, g, deg, g == n)
