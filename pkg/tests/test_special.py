import math
from fractions import Fraction

import mpmath
import pytest

from lbounds.interval import interval as iv
from lbounds.interval.interval import PI, Interval
from lbounds.special.gamma import (E_linear_majorant, E_of, exact_E, g_of, g_tail_scaled, im_lngamma, lngamma,
                                   verify_E_linear_majorant, verify_E_positive, verify_gamma_bound,
                                   verify_gE_combined)
from lbounds.special.zeta import bernoulli, log_zeta, zeta_real
from tools.exception import DomainError


def test_bernoulli_numbers():
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("sigma, value", [
    (2, math.pi ** 2 / 6),
    (3, 1.2020569031595942),
    (4, math.pi ** 4 / 90),
])
def test_zeta_real_contains(sigma, value):
    z = zeta_real(sigma)
    assert z.overlaps(Interval(value))
    assert z.width < 1e-12


def test_zeta_interval_argument_is_monotone():
    z = zeta_real(Interval(2, 3))
    assert z.lo <= 1.2020569031595942 and math.pi ** 2 / 6 <= z.hi


def test_zeta_requires_sigma_above_one():
    with pytest.raises(DomainError):
        zeta_real(1)
    with pytest.raises(DomainError):
        log_zeta(Interval(0.9, 1.5))


@pytest.mark.parametrize("x, y", [(0.25, 0.5), (0.75, 3.0), (0.25, 40.0)])
def test_im_lngamma_against_mpmath(x, y):
    expected = float(mpmath.loggamma(mpmath.mpc(x, y)).imag)
    stable = im_lngamma(x, y, shift=16)
    assert stable.overlaps(Interval(expected))
    assert stable.width < 1e-5
    assert im_lngamma(x, y, form="lemma").overlaps(stable)


def test_lngamma_conjugate_branch():
    re_up, im_up = lngamma(0.5, 2.0)
    re_down, im_down = lngamma(0.5, -2.0)
    assert re_up.overlaps(re_down)
    assert im_up.overlaps(-im_down)


def test_g_forms_agree():
    for a in (0, 1):
        for T in (Fraction(5, 7), 1, 3, 20):
            assert g_of(a, T).overlaps(g_of(a, T, form="direct", shift=16))


@pytest.mark.parametrize("a", [0, 1])
def test_g_pointwise_bound(a):
    for T in (Fraction(5, 7), 1, 2, 10, 100):
        assert (iv.iv_abs(g_of(a, T)) * T).hi <= (2 - a) / 50


def test_g_tail_limit():
    limit = 1 / (24 * PI)
    assert g_tail_scaled(0, 0.0).overlaps(limit)
    assert g_tail_scaled(1, 0.0).overlaps(limit)


def test_g_rejects_small_T():
    with pytest.raises(DomainError):
        g_of(0, 0.5)


@pytest.mark.parametrize("a", [0, 1])
def test_E_at_zero_shift(a):
    T = 1
    closed = 4 * (8 + 6 * PI) / 45 / iv.pow_real((2 * a + 17) ** 2 + 4 * T * T, 1.5)
    assert E_of(a, 0, T).overlaps(closed)


def test_E_forms_agree():
    for a in (0, 1):
        for d, T in ((0.5, 1), (1.25, 2), (3.0, 5)):
            assert E_of(a, d, T).overlaps(E_of(a, d, T, form="direct"))


def test_E_majorizes_exact_difference():
    for a in (0, 1):
        for d in (0.25, 0.5, 1.0, 2.0, 4.0):
            for T in (Fraction(5, 7), 1, 2):
                assert exact_E(a, d, T).lo <= E_of(a, d, T).hi


def test_E_domain():
    with pytest.raises(DomainError):
        E_of(0, 4.5, 1)


def test_E_positive_small_box():
    outcome = verify_E_positive(0, d_range=(0.5, 1.0), T_range=(1, 2), budget=20000)
    assert outcome.proved


@pytest.mark.slow
@pytest.mark.parametrize("a", [0, 1])
def test_gamma_bound_proved(a):
    assert verify_gamma_bound(a).proved


def test_E_linear_majorant_pointwise():
    for a in (0, 1):
        for d in (0.25, 0.5, 0.625):
            assert (E_of(a, d, 1) / PI).hi <= E_linear_majorant(a, d, 1).hi


@pytest.mark.slow
@pytest.mark.parametrize("a", [0, 1])
def test_E_claims_proved_up_to_T_max(a):
    assert verify_E_positive(a).proved
    assert verify_E_linear_majorant(a).proved
    assert verify_gE_combined(a).proved


def test_g_and_E_accept_bottom_of_T_range():
    T = Fraction(5, 7)
    for a in (0, 1):
        assert (iv.iv_abs(g_of(a, T)) * T).hi <= (2 - a) / 50
        assert E_of(a, 1.0, T).lo > 0
        assert E_of(a, 1.0, Interval.from_fraction(T)).overlaps(E_of(a, 1.0, T))


@pytest.mark.slow
def test_gamma_bound_left_end_box():
    outcome = verify_gamma_bound(0, T_max=2.0)
    assert outcome.claims["finite"] == "proved"
