import pytest

from bch_atlas import CodeLength
from bch_atlas.errors import DomainError, OutOfTheoremRange, ParityError
from bch_atlas.params import (
    dim_aly, dim_lower_bound_generic, dim_small_delta, dimension_brute, dimension_closed,
    dimension_rows,
)

import oracle


@pytest.mark.parametrize("m, delta, b, k", [
    (11, 67, 1, 1367), (11, 121, 1, 817), (11, 343, 1, 3), (12, 67, 1, 3329),
    (10, 35, 1, 705), (11, 3, 0, 2026), (10, 5, 1, 985),
])
def test_frozen_dimensions(m, delta, b, k):
    L = CodeLength(m)
    assert dimension_brute(L, delta, b).dimension == k
    assert L.n - len(oracle.defining_set(L.n, delta, b)) == k


def test_closed_spot_values():
    L = CodeLength(11)
    spec = dimension_closed(L, 343, 1)
    assert (spec.dimension, spec.bose, spec.distance_bound) == (3, 683, 683)
    assert dimension_closed(L, 67, 1).dimension == 1367
    assert dimension_closed(CodeLength(10), 35, 1).dimension == 705
    assert dimension_closed(CodeLength(12), 67, 1).dimension == 3329


@pytest.mark.parametrize("m", [10, 11, 12, 13, 14])
@pytest.mark.parametrize("b", [0, 1])
def test_closed_equals_brute_on_every_row(m, b):
    L = CodeLength(m)
    for row in dimension_rows(L, b):
        for delta in range(row.lo | 1, row.hi + 1, 2):
            c, o = dimension_closed(L, delta, b), dimension_brute(L, delta, b)
            assert (c.dimension, c.bose, c.defining_size) == (o.dimension, o.bose, o.defining_size), (row, delta)


@pytest.mark.parametrize("m", [10, 11, 12])
def test_band_formulas_match_brute(m):
    L = CodeLength(m)
    h = (m - 1) // 2
    for delta in range(2, (1 << (h + 1)) + 1):
        assert dim_small_delta(L, delta, 1) == dimension_brute(L, delta, 1).dimension
    for delta in range(2, (1 << h) + 3):
        assert dim_small_delta(L, delta, 0) == dimension_brute(L, delta, 0).dimension
    assert dim_small_delta(L, (1 << (h + 1)) + 1, 1) is None


@pytest.mark.parametrize("m", [5, 6, 7])
def test_band_against_oracle_small_m(m):
    n = (1 << m) + 1
    L = CodeLength(m)
    h = (m - 1) // 2
    for delta in range(2, (1 << (h + 1)) + 1):
        assert dim_small_delta(L, delta, 1) == n - len(oracle.defining_set(n, delta, 1))


def test_b_shift_and_distance_bound():
    L = CodeLength(11)
    for delta in (5, 67, 121, 343, 685):
        one, zero = dimension_brute(L, delta, 1), dimension_brute(L, delta, 0)
        assert zero.dimension == one.dimension - 1
        assert zero.distance_bound == 2 * zero.bose


@pytest.mark.parametrize("delta", [685, 1001, 2049])
def test_terminal_row(delta):
    spec = dimension_closed(CodeLength(11), delta, 1)
    assert (spec.dimension, spec.bose) == (1, 2049)


def test_closed_domain():
    L = CodeLength(11)
    with pytest.raises(ParityError):
        dimension_closed(L, 68, 1)
    with pytest.raises(OutOfTheoremRange):
        dimension_closed(L, 5, 1)
    with pytest.raises(DomainError):
        dimension_closed(L, 67, 2)
    with pytest.raises(OutOfTheoremRange):
        dimension_closed(L, 685, 0)


@pytest.mark.parametrize("m", [10, 11, 12])
def test_bounds_sandwich_true_dimension(m):
    L = CodeLength(m)
    for delta in range(3, 400, 2):
        k = dimension_brute(L, delta, 1).dimension
        generic = dim_lower_bound_generic(L.n, 2 * m, delta, False)
        refined = dim_lower_bound_generic(L.n, 2 * m, delta, True)
        assert generic.value <= refined.value
        assert refined.vacuous or refined.value <= k


def test_lower_bound_flags():
    assert dim_lower_bound_generic(2049, 22, 5, True) == (2005, False)
    assert dim_lower_bound_generic(17, 8, 5, False).vacuous
    with pytest.raises(ParityError):
        dim_lower_bound_generic(2049, 22, 4, True)
    with pytest.raises(DomainError):
        dim_lower_bound_generic(2049, 22, 1, False)


def test_dim_aly():
    # for n = 2^m + 1 the window closes below delta = 2
    assert dim_aly(2049, 2, 22, 2) is None
    # primitive length 31 = 2^5 - 1: window reaches delta = 8
    for delta in range(2, 9):
        T = set()
        for x in range(1, delta):
            T.update(oracle.orbit(x, 31))
        assert dim_aly(31, 2, 5, delta) == 31 - len(T)
    with pytest.raises(DomainError):
        dim_aly(30, 2, 4, 3)
