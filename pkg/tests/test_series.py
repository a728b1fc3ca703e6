import os
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pnorm import (
    MalformedCacheError,
    StaleCacheError,
    WeightSpec,
    WeightUndefinedError,
    brute_power_sum,
    cache_load,
    cache_store,
    enumerate_partitions,
    expand_euler_product,
    max_norm,
    moment,
    norm,
    norm_power_sum,
    partition_numbers,
)
from pnorm.series import CACHE_MAGIC


def brute_weighted_sum(weights, n):
    total = 0
    for lam in enumerate_partitions(n):
        term = 1
        for part in lam:
            term *= weights[part - 1]
        total += term
    return total


# -- expansion --------------------------------------------------------------------

def test_unit_expansion_counts_partitions():
    c = expand_euler_product(WeightSpec.unit(), 10)
    assert c[5] == 7
    assert c[10] == 42


def test_norm_power_expansions_small():
    assert expand_euler_product(WeightSpec.norm_power(1), 4).coeffs == (1, 1, 3, 6, 14)
    assert expand_euler_product(WeightSpec.norm_power(2), 3)[3] == 14


@pytest.mark.parametrize("ell", [1, 2, 7])
def test_degree_zero(ell):
    assert expand_euler_product(WeightSpec.norm_power(ell), 0).coeffs == (1,)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_matches_enumeration(ell):
    series = expand_euler_product(WeightSpec.norm_power(ell), 25)
    for n in range(26):
        assert series[n] == brute_power_sum(ell, n)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=-5, max_value=9), min_size=12, max_size=12))
def test_custom_weights_match_enumeration(weights):
    series = expand_euler_product(WeightSpec.custom(weights), 12)
    for n in range(13):
        assert series[n] == brute_weighted_sum(weights, n)


def test_custom_weights_must_cover_range():
    with pytest.raises(WeightUndefinedError):
        expand_euler_product(WeightSpec.custom([1, 2, 3]), 4)


def test_custom_tag_is_digest():
    tag = WeightSpec.custom([1, 2, 3]).tag
    assert tag.startswith("custom:")
    assert tag == WeightSpec.custom((1, 2, 3)).tag
    assert tag != WeightSpec.custom([1, 2, 4]).tag


def test_tags():
    assert WeightSpec.unit().tag == "unit"
    assert WeightSpec.norm_power(4).tag == "norm_power:4"
    with pytest.raises(ValueError):
        WeightSpec.norm_power(0)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=3), st.randoms())
def test_absorption_order_irrelevant(n_max, ell, rnd):
    order = list(range(1, n_max + 1))
    rnd.shuffle(order)
    w = WeightSpec.norm_power(ell)
    assert expand_euler_product(w, n_max, order=order) == expand_euler_product(w, n_max)


# -- partition numbers ------------------------------------------------------------

def test_partition_numbers_small():
    p = partition_numbers(10)
    assert p.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_pentagonal_agrees_with_product():
    assert partition_numbers(500).coeffs == expand_euler_product(WeightSpec.unit(), 500).coeffs
    assert partition_numbers(100)[100] == 190569292


# -- power sums and moments --------------------------------------------------------

@pytest.mark.parametrize("ell, n, expected", [(1, 5, 25), (2, 4, 46), (1, 0, 1), (6, 0, 1)])
def test_norm_power_sum(ell, n, expected, cache):
    assert norm_power_sum(ell, n, cache) == expected


@pytest.mark.parametrize(
    "ell, n, expected", [(1, 3, Fraction(2)), (1, 5, Fraction(25, 7)), (4, 1, Fraction(1))]
)
def test_moment(ell, n, expected, cache):
    assert moment(ell, n, cache) == expected


def test_moment_lowest_terms(cache):
    m = moment(1, 600, cache)
    assert m.denominator > 0
    assert Fraction(m.numerator, m.denominator) == m


def test_monotone_in_ell(cache):
    for n in range(0, 120):
        assert norm_power_sum(1, n, cache) <= norm_power_sum(2, n, cache) <= norm_power_sum(3, n, cache)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_sandwich_by_max_norm(ell, cache):
    from pnorm import partition_count

    for n in range(2, 150):
        M = max_norm(n).value ** ell
        assert M <= norm_power_sum(ell, n, cache) <= partition_count(n, cache) * M


def test_cauchy_schwarz(cache):
    for n in range(0, 200):
        assert moment(1, n, cache) ** 2 <= moment(2, n, cache)


def test_cache_serves_prefix_of_larger_expansion(cache):
    big = cache.get(WeightSpec.norm_power(2), 60)
    assert cache.get(WeightSpec.norm_power(2), 20).coeffs == big.coeffs[:21]


# -- on-disk cache ----------------------------------------------------------------

def test_round_trip(tmp_path):
    s = expand_euler_product(WeightSpec.norm_power(2), 50)
    path = cache_store(s, tmp_path / "s.txt")
    assert cache_load(s.tag, 50, path) == s


def test_file_layout(tmp_path):
    s = expand_euler_product(WeightSpec.norm_power(2), 3)
    path = cache_store(s, tmp_path / "s.txt")
    with open(path, "rb") as fh:
        raw = fh.read()
    assert raw == f"{CACHE_MAGIC}\nweight=norm_power:2\nnmax=3\n0 1\n1 1\n2 5\n3 14\n".encode()


def test_prefix_load(tmp_path):
    s = expand_euler_product(WeightSpec.norm_power(2), 50)
    path = cache_store(s, tmp_path / "s.txt")
    loaded = cache_load(s.tag, 10, path)
    assert loaded.n_max == 10
    assert loaded.coeffs == s.coeffs[:11]


def test_stale_load(tmp_path):
    s = expand_euler_product(WeightSpec.norm_power(2), 50)
    path = cache_store(s, tmp_path / "s.txt")
    with pytest.raises(StaleCacheError):
        cache_load(s.tag, 60, path)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda t: t.replace(CACHE_MAGIC, "PNORMSERIES 2"),
        lambda t: t.replace("weight=norm_power:2", "weight=norm_power:3"),
        lambda t: t.replace("nmax=5", "nmax=five"),
        lambda t: t.replace("\n3 14\n", "\n3 1x4\n"),
        lambda t: t.replace("\n3 14\n", "\n4 14\n"),
        lambda t: t.split("\n3 14\n")[0] + "\n",
    ],
    ids=["version", "tag", "nmax", "token", "index", "truncated"],
)
def test_malformed_files(tmp_path, mutate):
    s = expand_euler_product(WeightSpec.norm_power(2), 5)
    path = cache_store(s, tmp_path / "s.txt")
    path.write_text(mutate(path.read_text()))
    with pytest.raises(MalformedCacheError) as info:
        cache_load(s.tag, 5, path)
    assert str(path) in str(info.value)


def test_store_leaves_no_temp_files(tmp_path):
    cache_store(expand_euler_product(WeightSpec.unit(), 30), tmp_path / "u.txt")
    leftovers = [f for f in os.listdir(tmp_path) if f.endswith(".tmp")]
    assert leftovers == []


def test_disk_cache_persists_and_extends(disk_cache, tmp_path):
    from pnorm import SeriesCache

    w = WeightSpec.norm_power(1)
    disk_cache.get(w, 30)
    path = disk_cache.path_for(w.tag)
    assert cache_load(w.tag, 30, path)[30] == norm_power_sum(1, 30)
    # a fresh process-level cache reads the file, and grows it on demand
    fresh = SeriesCache(disk_cache.directory)
    assert fresh.get(w, 20)[20] == norm_power_sum(1, 20)
    fresh.get(w, 45)
    assert cache_load(w.tag, 45, path)[45] == norm_power_sum(1, 45)


def test_disk_cache_rejects_corruption(disk_cache):
    w = WeightSpec.norm_power(2)
    disk_cache.get(w, 10)
    path = disk_cache.path_for(w.tag)
    path.write_text("garbage\n")
    from pnorm import SeriesCache

    with pytest.raises(MalformedCacheError):
        SeriesCache(disk_cache.directory).get(w, 5)
