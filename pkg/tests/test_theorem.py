from fractions import Fraction

import pytest

from lbounds.bound.census import primitive_census, table_entry, zero_budget
from lbounds.bound.theorem import c1c2_curve, c2_breakdown, derive_C2, theorem_bound, theorem_width
from lbounds.interval.interval import Interval
from tools.exception import DomainError


def test_small_ell_means_no_zeros():
    result = theorem_bound(10, Fraction(5, 7))
    assert result.n_zero
    assert result.upper.hi == 0
    assert result.min_zeros == result.max_zeros == 0


@pytest.mark.parametrize("q, T", [(13 * 10 ** 46, 1), (12_000_000, 2)])
def test_lower_bound_guarantees_a_zero(q, T):
    result = theorem_bound(q, T)
    assert result.lower.lo > 0
    assert result.min_zeros >= 1
    assert result.min_zeros <= result.max_zeros


def test_bottom_of_T_range_is_accepted():
    result = theorem_bound(10 ** 6, Fraction(5, 7))
    assert not result.n_zero
    assert result.max_zeros >= result.min_zeros >= 0


def test_bounds_are_ordered():
    for q in (100, 10 ** 4, 10 ** 8):
        for a in (0, 1):
            result = theorem_bound(q, 1, a)
            assert 0 <= result.lower.lo <= result.upper.hi


def test_theorem_width_value():
    ell = Interval(10.0)
    assert theorem_width(ell).overlaps(Interval(0.22737 * 10 + 2 * 2.3978952727983707 - 0.5))


def test_theorem_domain():
    with pytest.raises(DomainError):
        theorem_bound(1, 1)
    with pytest.raises(DomainError):
        theorem_bound(100, 0.5)


@pytest.mark.parametrize("C1, C2", [(0.247, 6.894), (0.298, 4.358)])
def test_derive_C2(C1, C2):
    assert derive_C2(C1) <= C2


def test_derive_C2_decreasing():
    curve = c1c2_curve([0.25, 0.3, 0.4])
    values = [c2 for _, c2 in curve]
    assert values == sorted(values, reverse=True)


def test_derive_C2_needs_slope():
    with pytest.raises(DomainError):
        c2_breakdown(0.2)


def test_census_prime_powers():
    assert primitive_census(4) == (0, 1)
    assert primitive_census(8) == (1, 1)
    assert primitive_census(2) == (0, 0)
    assert primitive_census(7) == (2, 3)
    assert primitive_census(9) == (2, 2)


def test_zero_budget_small():
    # q ≤ 10 时 ℓ ≤ 1.567，没有零点
    assert zero_budget(10, 1) == 0
    assert zero_budget(200, 1) > 0


@pytest.mark.slow
def test_zero_budget_large():
    assert zero_budget(10 ** 5, 1) == pytest.approx(16_461_465_486, rel=1e-3)


@pytest.mark.slow
def test_table_entry_example_column():
    q = table_entry(1, 0, 7, q_start=16384)
    assert 0.99 * 25252 <= q <= 1.01 * 25252
