from fractions import Fraction

import pytest

from lbounds.bound.backlund import (arg_segment_bound, backlund_preconditions, backlund_terms, rho_of,
                                    zeta_ratio)
from lbounds.bound.jensen import F_theta, jensen_integral, kappas, lemma_terms, theta_nodes
from lbounds.bound.params import select_params
from lbounds.interval.interval import PI, Interval
from lbounds.special.zeta import log_zeta
from tools.exception import PreconditionFailure

ETA = Fraction(19, 100)


@pytest.fixture(scope="module")
def figure_params():
    return select_params(10 ** 6, 1, 0, regime="custom", c=Fraction(6, 5), r=Fraction(19, 10),
                         eta=Fraction(141, 1000))


def test_F_at_zero_is_log_zeta(example_params):
    p = example_params
    assert F_theta(0.0, p).overlaps(log_zeta(p.c + p.r))


def test_F_is_continuous_at_branch_angles(example_params):
    p = example_params
    nodes = theta_nodes(p)
    for node in (nodes.one_eta, nodes.minus_eta):
        for k in (12, 16, 20):
            eps = 2.0 ** -k
            left = F_theta(node.lo - eps, p)
            right = F_theta(node.hi + eps, p)
            assert abs(left.mid - right.mid) < 2 ** (-k + 6) * p.ell.hi


def test_kappa2_single_node():
    p = select_params(25252, 1, 0, regime="table", k=7, J1=1)
    assert kappas(p).k2.overlaps(PI / 4 * log_zeta(p.c + p.r))


def test_kappa6_vanishes_beyond_range(example_params):
    p = example_params
    k = kappas(p)
    j_stop = (p.r - p.c + 0.5).hi
    assert len(k.k6) <= int(j_stop)


def test_kappa_exact_within_quadrature(example_params):
    exact = kappas(example_params)
    quad = kappas(example_params, method="quadrature")
    for a, b in zip((exact.k4, exact.k5, *exact.k6), (quad.k4, quad.k5, *quad.k6)):
        assert a.overlaps(b)


def test_worked_example_integral(example_params):
    result = jensen_integral(example_params, path="auto")
    assert result.path == "direct"
    assert result.bound.hi <= 13.8132592 + 1e-3
    assert result.direct.lo <= result.lemma.hi


def test_lemma_path_is_a_looser_upper_bound(example_params):
    result = jensen_integral(example_params, path="lemma")
    assert result.bound.hi == lemma_terms(example_params).total.hi
    assert 13.8132592 <= result.bound.hi <= 14.0


@pytest.mark.slow
def test_figure_integral(figure_params):
    value = jensen_integral(figure_params, path="direct").direct
    assert value.lo <= 16.375 and value.hi >= 16.365
    assert value.width <= 0.1


def test_jensen_integral_monotone_in_q():
    for k in (6, 7, 8):
        small = jensen_integral(select_params(25252, 1, 0, regime="table", k=k, eta=ETA), path="lemma")
        large = jensen_integral(select_params(50504, 1, 0, regime="table", k=k, eta=ETA), path="lemma")
        assert small.bound.hi <= large.bound.hi


def test_lemma_path_precondition_failure():
    p = select_params(10 ** 6, 1, 0, regime="custom", c=Fraction(11, 10), r=Fraction(6, 5),
                      eta=Fraction(1, 2))
    with pytest.raises(PreconditionFailure) as info:
        lemma_terms(p)
    assert "1+η ≤ c" in info.value.failures


def test_zeta_ratio_example():
    assert zeta_ratio(Interval.from_fraction(Fraction(2694, 2048))).hi <= 1.0682664 + 1e-6


def test_backlund_terms_example(example_params):
    terms = backlund_terms(example_params)
    assert terms.mode == "inelegant"
    assert terms.E_delta.hi <= 0.1616976 + 1e-3
    assert (terms.E_sigma1 - terms.E_delta).hi <= 0.5119502 + 1e-3
    assert terms.rho.overlaps(rho_of(example_params))


def test_backlund_mode_mismatch_rejected(example_params):
    assert backlund_preconditions(example_params, "simple")
    with pytest.raises(PreconditionFailure):
        arg_segment_bound(example_params, 1.0, mode="simple")
