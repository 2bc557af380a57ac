import math
from fractions import Fraction

import pytest

from lbounds.bound.params import (compute_ell, default_eta, main_term, nearest_int, params_from_ell,
                                  select_params, table_column, theta_sigma)
from lbounds.interval import special as sp
from lbounds.interval.interval import HALF_PI, PI, Interval
from tools.exception import DomainError, RegimeMismatch


def test_compute_ell():
    ell = compute_ell(25252, 1)
    assert ell.overlaps(Interval(math.log(25252 * 3 / (2 * math.pi))))


def test_main_term_parity_offset():
    even = main_term(1000, 1, 1)
    odd = main_term(1000, 1, -1)
    assert (odd - even).overlaps(Interval(0.5))
    with pytest.raises(DomainError):
        main_term(1000, 1, 0)


def test_large_regime_at_30():
    p = params_from_ell(30, "large")
    assert p.eta.overlaps(Interval.from_fraction(Fraction(18, 280)))
    assert p.c.overlaps(Interval.from_fraction(1 + Fraction(391, 2903)))
    assert p.r.overlaps(Interval.from_fraction(Fraction(149, 140) + Fraction(769, 1412)))


@pytest.mark.parametrize("ell", [27.02, 100.0, 1e4, 1e6])
def test_large_regime_ranges(ell):
    p = params_from_ell(ell, "large")
    assert 1 < p.c.lo and p.c.hi < 1.15
    assert 1.06 < p.r.lo and p.r.hi < 1.65
    assert 1.23 < p.sigma1.lo and p.sigma1.hi < 1.40
    assert 0.26 < p.delta.lo and p.delta.hi < 0.40


def test_regime_mismatch():
    with pytest.raises(RegimeMismatch):
        params_from_ell(10, "large")
    with pytest.raises(RegimeMismatch):
        params_from_ell(3, "middle")
    with pytest.raises(RegimeMismatch):
        select_params(25252, 1, 0, regime="table", k=3)


def test_table_params(example_params):
    p = example_params
    assert p.c_exact == Fraction(2694, 2048)
    assert p.r_exact == Fraction(4651, 2048)
    assert p.mode == "inelegant"
    assert p.regime == "table"


def test_select_params_validation():
    with pytest.raises(DomainError):
        select_params(1, 1, 0)
    with pytest.raises(DomainError):
        select_params(100, 1, 2, regime="custom", c=1.2, r=1.9)
    with pytest.raises(DomainError):
        select_params(100, 1, 0, regime="custom", c=1.2)



def test_conductor_two_is_in_domain():
    p = select_params(2, 1, 0, regime="custom", c=Fraction(6, 5), r=Fraction(19, 10))
    assert p.q == 2


@pytest.mark.parametrize("T", [Fraction(5, 7), 5 / 7, Interval.from_fraction(Fraction(5, 7))])
def test_table_lookup_accepts_float_and_interval_T(T):
    p = select_params(3289, T, 0, regime="table", k=5)
    assert p.c_exact == Fraction(2822, 2048)
    assert p.r_exact == Fraction(5006, 2048)


def test_table_lookup_rejects_other_heights():
    assert table_column(0.72, 0) is None
    assert table_column(1, 0) is not None

def test_default_eta_capped():
    assert default_eta(Interval(0.0)).hi <= 0.5
    assert default_eta(Interval(30.0)).overlaps(Interval.from_fraction(Fraction(18, 280)))


def test_theta_sigma_branches():
    c, r = Fraction(2694, 2048), Fraction(4651, 2048)
    assert theta_sigma(c, c, r).overlaps(HALF_PI)
    assert theta_sigma(c + r, c, r).contains(0)
    assert theta_sigma(c - r, c, r).overlaps(PI)
    assert theta_sigma(c + 2 * r, c, r).contains(0)


def test_theta_sigma_round_trip(example_params):
    p = example_params
    sigma = 1 + p.eta
    theta = theta_sigma(sigma, p.c, p.r)
    assert (p.c + p.r * sp.cos(theta)).overlaps(sigma)


@pytest.mark.parametrize("x, n", [(Fraction(3, 2), 1), (Fraction(-3, 2), -1), (Fraction(-5, 2), -2),
                                  (Fraction(7, 5), 1), (-1, -1), (Fraction(-8, 5), -2)])
def test_nearest_int_ties_toward_zero(x, n):
    assert nearest_int(x) == n
