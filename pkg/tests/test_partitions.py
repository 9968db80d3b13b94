from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from flipclasses.partitions import (
    INVALID,
    NegOnes,
    Partition,
    binom,
    catalan,
    class_size,
    combine,
    fill_up,
    format_partition,
    minus,
    models_fiber,
    normalize,
    parse_partition,
    partitions_of,
    partitions_up_to,
    plus,
    triangulation_count,
    wreath,
)

P = Partition

parts_lists = st.lists(st.integers(min_value=1, max_value=6), max_size=6)
partitions = parts_lists.map(Partition)


def young_minus(mu):
    """Independent first-column removal: read columns off the diagram."""
    rows = [["x"] * p for p in mu]
    return Partition(len(r) - 1 for r in rows)


# -- normalize / parse --------------------------------------------------------

@pytest.mark.parametrize(
    "raw, expected",
    [([], ()), ([1, 3, 2], (3, 2, 1)), ([2, 0, 1, 1], (2, 1, 1))],
)
def test_normalize(raw, expected):
    assert normalize(raw) == expected


def test_normalize_rejects_negative():
    with pytest.raises(ValueError):
        normalize([2, -1])


def test_views():
    lam = P([3, 2, 2, 1])
    assert lam.weight == 8 and lam.length == 4
    assert lam.m(2) == 2 and lam.m(5) == 0
    assert lam.multiplicities == {1: 1, 2: 2, 3: 1}


@pytest.mark.parametrize(
    "text, expected",
    [("3,2,2,1", (3, 2, 2, 1)), ("", ()), ("0", ()), ("1^2 2^3", (2, 2, 2, 1, 1)), ("2 1^2", (2, 1, 1))],
)
def test_parse(text, expected):
    assert parse_partition(text) == expected


def test_parse_garbage():
    with pytest.raises(ValueError):
        parse_partition("a,b")


@given(partitions)
def test_format_roundtrip(lam):
    assert parse_partition(format_partition(lam)) == lam


# -- plus / minus -------------------------------------------------------------

@pytest.mark.parametrize("mu, expected", [((), ()), ((1,), (2,)), ((2, 1), (3, 2))])
def test_plus(mu, expected):
    assert plus(P(mu)) == expected


@pytest.mark.parametrize("mu, expected", [((1,), ()), ((3,), (2,)), ((3, 1), (2,))])
def test_minus(mu, expected):
    assert minus(P(mu)) == expected
    assert minus(P(mu)) == young_minus(mu)


def test_minus_empty_is_error():
    with pytest.raises(ValueError):
        minus(P())


def test_plus_multiplicities():
    mu = P([3, 1, 1])
    assert all(plus(mu).m(i + 1) == mu.m(i) for i in range(1, 5))


@pytest.mark.parametrize("mu", partitions_up_to(12))
def test_minus_plus_roundtrip(mu):
    assert minus(plus(mu)) == mu if mu else plus(mu) == mu


# -- combine / fill_up / wreath ----------------------------------------------

def test_combine_examples():
    assert combine(P([3, 2]), P([4, 2, 1])) == (4, 3, 2, 2, 1)
    assert combine(P([3, 2, 2, 1, 1, 1]), NegOnes(2)) == (3, 2, 2, 1)
    assert combine(P([2]), NegOnes(1)) is INVALID
    assert combine(INVALID, P([1])) is INVALID


@given(partitions, partitions, partitions)
def test_combine_algebra(a, b, c):
    assert combine(a, b) == combine(b, a)
    assert combine(combine(a, b), c) == combine(a, combine(b, c))
    assert combine(a, b).weight == a.weight + b.weight


@pytest.mark.parametrize(
    "gamma, m, expected", [((), 4, (1, 1, 1, 1)), ((3,), 4, (3, 1)), ((3, 2), 4, (3, 2))]
)
def test_fill_up(gamma, m, expected):
    assert fill_up(P(gamma), m) == expected


def test_wreath_examples():
    lam = P([1, 1, 1, 1])
    assert wreath(lam, P()) == lam
    assert wreath(lam, P([1])) == (2, 1, 1)
    assert wreath(lam, P([2, 1])) is INVALID


@given(partitions, partitions)
def test_wreath_weight_and_validity(lam, mu):
    w = wreath(lam, mu)
    if lam.m(1) < plus(mu).weight:
        assert w is INVALID
    else:
        assert w.weight == lam.weight


@given(partitions, st.integers(min_value=0, max_value=30))
def test_key_roundtrip_fill_plus(gamma, m):
    assert minus(fill_up(plus(gamma), m)) == gamma if (gamma or m) else True


@pytest.mark.parametrize("r", range(1, 11))
def test_key_roundtrip_minus_plus_fill(r):
    for gamma in partitions_of(r):
        assert fill_up(plus(minus(gamma)), r) == gamma


@pytest.mark.parametrize("m", range(0, 9))
def test_fill_plus_injective_with_full_image(m):
    domain = partitions_up_to(m)
    image = [fill_up(plus(g), m) for g in domain]
    assert len(set(image)) == len(image)
    assert set(partitions_of(m)) <= set(image)


# -- enumeration --------------------------------------------------------------

def brute_partitions(m):
    """Partitions of m from all non-increasing tuples, no recursion shared with the library."""
    out = set()
    for k in range(m + 1):
        for parts in product(range(1, m + 1), repeat=k):
            if sum(parts) == m and list(parts) == sorted(parts, reverse=True):
                out.add(parts)
    return out


def test_partitions_small():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(4)) == 5


@pytest.mark.parametrize("m", range(0, 8))
def test_partitions_match_brute_force(m):
    got = partitions_of(m)
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(m)
    assert got == sorted(got, reverse=True)


# -- fibers ------------------------------------------------------------------

def test_models_fiber_examples():
    assert models_fiber(P([2, 1]), 2) == [(P([3, 2]), P()), (P([3]), P([2])), (P([2]), P([3])), (P(), P([3, 2]))]
    assert models_fiber(P([1]), 3) == [(P([2]), P(), P()), (P(), P([2]), P()), (P(), P(), P([2]))]
    assert models_fiber(P([1, 1]), 3)[:3] == [(P([2, 2]), P(), P()), (P([2]), P([2]), P()), (P([2]), P(), P([2]))]


@given(partitions)
def test_models_fiber_arity_one(mu):
    assert models_fiber(mu, 1) == [(plus(mu),)]


@pytest.mark.parametrize("s, W", [(1, 7), (2, 7), (3, 6)])
def test_fibers_partition_one_free_tuples(s, W):
    seen = []
    for mu in partitions_up_to(W):
        if plus(mu).weight <= W:
            fib = models_fiber(mu, s)
            assert len(set(fib)) == len(fib)
            assert all(1 not in g for gamma in fib for g in gamma)
            seen.extend(fib)
    assert len(seen) == len(set(seen))
    one_free = [g for g in partitions_up_to(W) if 1 not in g]
    expected = {t for t in product(one_free, repeat=s) if sum(g.weight for g in t) <= W}
    assert set(seen) == expected


# -- counting primitives -------------------------------------------------------

def test_catalan():
    assert [catalan(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert triangulation_count(3) == 1 and triangulation_count(6) == 14
    assert binom(5, 2) == 10 and binom(2, 5) == 0


@pytest.mark.parametrize("nu, size", [((), 1), ((1,), 2), ((2,), 5), ((3,), 14), ((1, 1), 4)])
def test_class_size(nu, size):
    assert class_size(P(nu)) == size


@settings(max_examples=50)
@given(partitions)
def test_partition_is_canonical(lam):
    assert list(lam) == sorted(lam, reverse=True) and all(p > 0 for p in lam)
    assert sum(i * c for i, c in lam.multiplicities.items()) == lam.weight
