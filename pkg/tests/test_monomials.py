import pytest
from hypothesis import given, strategies as st

from conftest import gens
from monoring.errors import DegreeTooLow, EmptyAmbient, ParseError
from monoring.monomials import (
    connected_components,
    discrete_subsets,
    divides,
    format_monomial,
    is_connected,
    lcm,
    lcm_of,
    n_components,
    normalize_generators,
    parse_monomial,
    restriction,
    shares_factor,
)

monos = st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple)


def test_lcm_of_subsets():
    M = gens("xy yz zx")
    assert lcm_of(M.mask_of([(1, 1, 0), (0, 1, 1)]), M) == (1, 1, 1)
    assert lcm_of(0, M) == (0, 0, 0)
    N = gens("x2 xy")
    assert lcm_of(N.full, N) == (2, 1)


def test_shares_factor():
    assert shares_factor((1, 1, 0), (0, 1, 1))
    assert not shares_factor((1, 1, 0, 0), (0, 0, 1, 1))
    assert shares_factor((2, 0), (1, 1))


def test_components():
    path = gens("xy yz zw")
    assert n_components(path.full, path) == 1
    ci = gens("xy zw")
    assert n_components(ci.full, ci) == 2
    assert connected_components(0, ci) == []
    assert not is_connected(0, ci)


def test_normalize():
    assert normalize_generators([(1, 1, 0), (1, 1, 1)]).gens == ((1, 1, 0),)
    assert len(normalize_generators([(1, 1, 0), (0, 1, 1)]).gens) == 2
    with pytest.raises(DegreeTooLow):
        normalize_generators([(1, 0)])
    with pytest.raises(EmptyAmbient):
        normalize_generators([])


def test_restriction():
    tri = gens("xy yz zx")
    assert restriction(tri, [(1, 1, 1)]) == tri.full
    path = gens("xy yz")
    assert restriction(path, [(1, 1, 0)]) == path.mask_of([(1, 1, 0)])
    assert restriction(path, []) == 0


def test_discrete_subsets():
    subsets, g = discrete_subsets(gens("xy yz"))
    assert len(subsets) == 2 and g == 1
    subsets, g = discrete_subsets(gens("xy zw"))
    assert len(subsets) == 3 and g == 2
    subsets, g = discrete_subsets(gens("xy yz zx"))
    assert len(subsets) == 3 and g == 1


def test_parse_and_format_roundtrip():
    names = ("a", "b", "c")
    assert parse_monomial("a^2*c", names) == (2, 0, 1)
    assert parse_monomial("[0, 3, 1]", names) == (0, 3, 1)
    assert parse_monomial("1", names) == (0, 0, 0)
    assert format_monomial((2, 0, 1), names) == "a^2*c"
    assert format_monomial((0, 0, 0), names) == "1"
    with pytest.raises(ParseError):
        parse_monomial("a*q", names)


@given(monos, monos, monos)
def test_lcm_is_least_upper_bound(a, b, c):
    m = lcm(a, b)
    assert divides(a, m) and divides(b, m)
    if divides(a, c) and divides(b, c):
        assert divides(m, c)
    assert lcm(a, b) == lcm(b, a)


@given(monos)
def test_format_parse_roundtrip(a):
    names = ("a", "b", "c")
    assert parse_monomial(format_monomial(a, names), names) == a
