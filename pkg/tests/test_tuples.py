import pytest
from hypothesis import given, strategies as st

from lrsnake.tuples import (
    IntTuple, RSetParams, Snake, dual, enumerate_R, format_tuple, harpoon, is_snake,
    ominus, parse_tuple, partitions_of, shift, size, snakes_in_box, staircase,
)

small = st.integers(-6, 6)


def snakes(n):
    return st.lists(small, min_size=n, max_size=n).map(lambda v: Snake(sorted(v, reverse=True)))


def test_cyclic_access():
    t = IntTuple((5, 3, 2, 0))
    assert [t.at(i) for i in (1, 4, 5, 0, -3)] == [5, 0, 5, 0, 5]


def test_snake_validation():
    assert Snake((3, 3, -1)).n == 3
    with pytest.raises(ValueError):
        Snake((1, 2))
    assert not Snake((1, -1)).is_partition


def test_staircase_and_ominus():
    assert staircase(4) == (3, 2, 1, 0)
    assert ominus(4, 1, 4) == (4, 0, 0, -1)
    with pytest.raises(ValueError):
        ominus(1, 1, 1)
    with pytest.raises(ValueError):
        staircase(0)


def test_harpoon_examples():
    assert harpoon((3, 1, 0), (2, 1, -4))
    assert not harpoon((3, 1, 0), (2, 2, 0))
    with pytest.raises(ValueError):
        harpoon((1, 0), (1, 0, 0))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(snakes(n), snakes(n))), st.integers(-3, 3))
def test_harpoon_dual_and_shift(pair, d):
    mu, lam = pair
    h = harpoon(mu, lam)
    assert harpoon(dual(lam), dual(mu)) == h
    assert harpoon(shift(mu, d), shift(lam, d)) == h


@given(st.lists(small, min_size=1, max_size=5), st.integers(-4, 4))
def test_size_rules(v, d):
    assert size(shift(v, d)) == size(v) + d * len(v)
    assert size(dual(v)) == -size(v)
    assert dual(dual(v)) == tuple(v)


def _naive_R(mu, gamma, a, b, lo, hi):
    return sorted(
        nu for nu in snakes_in_box(len(mu), lo, hi)
        if harpoon(mu, nu) and harpoon(gamma, nu) and size(mu) - size(nu) == a and size(gamma) - size(nu) == b
    )


@pytest.mark.parametrize("n", [2, 3])
def test_enumerate_R_matches_box_filter(n):
    box = list(snakes_in_box(n, -3, 3))
    for mu in box[::3]:
        for gamma in box[::2]:
            for a in range(3):
                for b in range(3):
                    got = sorted(enumerate_R(RSetParams(mu, gamma, a, b)))
                    # nu_n >= mu_n - a, so this box holds every candidate
                    assert got == _naive_R(mu, gamma, a, b, -3 - a, 3)


def test_enumerate_R_non_snake_gamma_is_empty():
    assert enumerate_R(RSetParams(IntTuple((2, 1)), IntTuple((0, 3)), 0, 0)) == []


def test_partitions_of():
    assert [tuple(p) for p in partitions_of(3, 2)] == [(3, 0), (2, 1)]
    assert list(partitions_of(-1, 2)) == []


def test_parse_and_format():
    assert parse_tuple(" 5,-3 ,2") == (5, -3, 2)
    assert format_tuple(parse_tuple("4,2,1,-1")) == "4,2,1,-1"
    with pytest.raises(ValueError):
        parse_tuple("1,,2")
    with pytest.raises(ValueError):
        parse_tuple("1,2", n=3)


@given(st.lists(small, min_size=1, max_size=6))
def test_parse_roundtrip(v):
    assert parse_tuple(format_tuple(v)) == tuple(v)
    assert is_snake(sorted(v, reverse=True))
