import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import gens, ideals
from monoring.errors import NotAnEquivalence
from monoring.homology import reduced_homology_gf
from monoring.lattices import (
    apply_equivalence,
    build_lcm_lattice,
    connected_lattice_part,
    enumerate_saturated,
    enumerate_saturated_bruteforce,
    interval_order_complex,
    is_saturated,
    lattice_from_monomials,
    saturate,
    saturate_once,
    satt_join,
    satt_meet,
)
from monoring.monomials import normalize_generators
from monoring.poincare import polarize

TRI = gens("xy yz zx")
PATH = gens("xy yz zw")


def _m(M, *words):
    return M.mask_of(gens(" ".join(words), t=M.t).gens)


def test_lattice_elements():
    assert set(build_lcm_lattice(gens("xy yz")).elements) == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1)}
    L = build_lcm_lattice(TRI)
    assert len(L.elements) == 5
    assert L.bottom == (0, 0, 0) and L.top == (1, 1, 1)
    assert set(build_lcm_lattice(gens("xy")).elements) == {(0, 0), (1, 1)}


def test_saturate_examples():
    assert saturate(_m(TRI, "xy", "yz"), TRI) == TRI.full
    assert saturate(_m(TRI, "xy"), TRI) == _m(TRI, "xy")
    assert saturate(0, TRI) == 0
    assert not is_saturated(_m(TRI, "xy", "yz"), TRI)
    assert is_saturated(TRI.full, TRI)
    ci = gens("xy zw uv")
    assert all(is_saturated(S, ci) for S in range(8))


def test_enumerate_examples():
    assert len(enumerate_saturated(TRI).members) == 4
    assert len(enumerate_saturated(PATH).members) == 7
    assert len(enumerate_saturated(gens("xy zw uv")).members) == 7


def test_satt_operations():
    x, y = _m(TRI, "xy"), _m(TRI, "yz")
    assert satt_join(x, y, TRI) == TRI.full
    ci = gens("xy zw")
    assert satt_join(1, 2, ci) == 3
    assert satt_meet(x, x) == x


def test_interval_order_complex():
    assert reduced_homology_gf(interval_order_complex(_m(TRI, "xy"), TRI)) == reduced_homology_gf_of_empty()
    assert reduced_homology_gf(interval_order_complex(TRI.full, TRI)).coeffs == {0: 2}
    assert reduced_homology_gf(interval_order_complex(PATH.full, PATH)).coeffs == {1: 1}


def reduced_homology_gf_of_empty():
    from monoring.homology import LaurentGF

    return LaurentGF({-1: 1})


def test_connected_lattice_part():
    assert set(connected_lattice_part(TRI)) == {(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)}
    assert set(connected_lattice_part(gens("xy zw"))) == {(1, 1, 0, 0), (0, 0, 1, 1)}
    assert set(connected_lattice_part(gens("xy"))) == {(1, 1)}


def test_equivalences():
    L = build_lcm_lattice(TRI)
    rep = apply_equivalence(lambda a: a, L, L)
    assert rep.sat_bijective
    pol = polarize(gens("x2 xy"))
    apply_equivalence(pol.lattice_map, pol.target_lattice, pol.source_lattice)
    chain = lattice_from_monomials([(1, 1, 0), (1, 1, 1)], 3)
    swap = {(0, 0, 0): (0, 0, 0), (1, 1, 0): (1, 1, 1), (1, 1, 1): (1, 1, 0)}
    with pytest.raises(NotAnEquivalence):
        apply_equivalence(swap, chain, chain)


def _random_ideal(rng, t=4, n=5, top=2):
    while True:
        raw = [tuple(rng.randint(0, top) for _ in range(t)) for _ in range(rng.randint(1, n))]
        raw = [a for a in raw if sum(a) >= 2]
        if raw:
            return normalize_generators(raw, t=t)


@settings(max_examples=80, deadline=None)
@given(ideals(), st.integers(0, 31), st.integers(0, 31))
def test_closure_axioms(M, S, T):
    n = len(M.gens)
    S &= (1 << n) - 1
    T = (T & ((1 << n) - 1)) | S
    s = saturate(S, M)
    assert S & ~s == 0
    assert saturate(s, M) == s
    assert saturate(T, M) & s == s
    assert is_saturated(s, M)
    assert is_saturated(S, M) == (saturate_once(S, M) == S)


@settings(max_examples=40, deadline=None)
@given(ideals(max_n=7))
def test_bfs_matches_bruteforce(M):
    assert set(enumerate_saturated(M).members) == set(enumerate_saturated_bruteforce(M).members)


@settings(max_examples=40, deadline=None)
@given(ideals())
def test_saturation_local_to_lcm(M):
    # S saturated in M iff saturated in the restriction of M below m_S
    from monoring.monomials import lcm_of, restriction

    for S in range(1, 1 << len(M.gens)):
        N = restriction(M, [lcm_of(S, M)])
        local = M.restrict_to(N)
        local_S = local.mask_of([M.gens[i] for i in range(len(M.gens)) if S >> i & 1])
        assert is_saturated(S, M) == is_saturated(local_S, local)


def test_satt_join_is_least_saturated_upper_bound():
    rng = random.Random(5)
    for _ in range(20):
        M = _random_ideal(rng)
        fam = set(enumerate_saturated(M).with_empty())
        for S in fam:
            for T in fam:
                j = satt_join(S, T, M)
                uppers = [U for U in fam if (S | T) & ~U == 0]
                assert j in fam and all(j & ~U == 0 for U in uppers)


@settings(max_examples=80, deadline=None)
@given(ideals(t=5, max_n=6, top=3), st.integers(0, 63))
def test_one_pass_is_already_idempotent(M, S):
    S &= (1 << len(M.gens)) - 1
    once = saturate_once(S, M)
    assert saturate_once(once, M) == once == saturate(S, M)


@settings(max_examples=60, deadline=None)
@given(ideals(max_n=5))
def test_saturated_iff_components_saturated(M):
    from monoring.monomials import connected_components

    for S in range(1 << len(M.gens)):
        comps = connected_components(S, M)
        assert is_saturated(S, M) == all(is_saturated(C, M) for C in comps)


@settings(max_examples=60, deadline=None)
@given(ideals(max_n=5))
def test_lcm_map_is_surjective_join_morphism(M):
    from monoring.monomials import lcm, lcm_of

    fam = list(enumerate_saturated(M).with_empty())
    for S in fam:
        for T in fam:
            assert lcm_of(satt_join(S, T, M), M) == lcm(lcm_of(S, M), lcm_of(T, M))
    assert {lcm_of(S, M) for S in fam} == set(build_lcm_lattice(M).elements)
