import pytest
from hypothesis import given
from hypothesis import strategies as st

from pnorm import CoefficientSeries, Partition, norm, norm_power

parts_lists = st.lists(st.integers(min_value=1, max_value=12), max_size=8)


def test_constructor_sorts_non_increasing():
    assert Partition([1, 3, 2, 3]).parts == (3, 3, 2, 1)
    assert Partition([1, 3, 2, 3]) == Partition((3, 3, 2, 1))


def test_empty_partition_is_partition_of_zero():
    assert Partition().parts == ()
    assert Partition().n == 0


@pytest.mark.parametrize("bad", [[0], [3, 0, 1], [-2]])
def test_non_positive_parts_rejected(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_non_integer_parts_rejected():
    with pytest.raises(TypeError):
        Partition([2.0])


@pytest.mark.parametrize(
    "parts, expected", [((), 1), ((3, 2), 6), ((4, 3, 1, 1), 12)]
)
def test_norm(parts, expected):
    assert norm(Partition(parts)) == expected


@pytest.mark.parametrize(
    "parts, ell, expected", [((2, 2, 1), 2, 16), ((), 5, 1), ((3, 2), 3, 216)]
)
def test_norm_power(parts, ell, expected):
    assert norm_power(Partition(parts), ell) == expected


def test_norm_power_rejects_zero_exponent():
    with pytest.raises(ValueError):
        norm_power(Partition([2]), 0)


@given(parts_lists, st.randoms())
def test_norm_ignores_input_order(parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert Partition(shuffled) == Partition(parts)
    assert norm(Partition(shuffled)) == norm(Partition(parts))


@given(parts_lists, st.integers(min_value=1, max_value=6))
def test_norm_bounds_and_monotone_powers(parts, ell):
    lam = Partition(parts)
    assert norm(lam) >= 1
    assert norm_power(lam, ell + 1) >= norm_power(lam, ell)
    assert lam.parts == tuple(sorted(lam.parts, reverse=True))
    assert lam.n == sum(parts)


@given(st.integers(min_value=1, max_value=12), parts_lists)
def test_norm_multiplicative_on_prepend(a, parts):
    mu = Partition(parts)
    assert norm(Partition((a,) + mu.parts)) == a * norm(mu)


def test_coefficient_series_validates_shape():
    CoefficientSeries("unit", 2, (1, 1, 2))
    with pytest.raises(ValueError):
        CoefficientSeries("unit", 3, (1, 1, 2))
    with pytest.raises(ValueError):
        CoefficientSeries("unit", 0, (2,))


def test_coefficient_series_prefix():
    s = CoefficientSeries("unit", 3, (1, 1, 2, 3))
    assert s.prefix(1).coeffs == (1, 1)
    with pytest.raises(ValueError):
        s.prefix(4)
