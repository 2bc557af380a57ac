import math
import random
from fractions import Fraction

import pytest

from lbounds.interval import interval as iv
from lbounds.interval import special as sp
from lbounds.interval.cinterval import ComplexInterval, unit_root
from lbounds.interval.interval import HALF_PI, PI, Box, Interval
from lbounds.interval.jet import Jet, jsin, midpoint_rule
from lbounds.interval.prover import enclose_range, prove_upper_bound
from tools.exception import BudgetExceeded, DomainError


def test_sum_contains_exact_rational():
    total = Interval(0.1) + Interval(0.2)
    assert total.contains(Fraction(0.1) + Fraction(0.2))
    assert total.lo < total.hi


def test_from_fraction_is_tight():
    third = Interval.from_fraction(Fraction(1, 3))
    assert third.lo <= Fraction(1, 3) <= third.hi
    assert third.hi == math.nextafter(third.lo, math.inf)


def test_constants():
    assert PI.lo <= math.pi <= PI.hi
    assert (2 * HALF_PI).overlaps(PI)


def test_random_arithmetic_contains_float_result():
    rng = random.Random(20240101)
    for _ in range(200):
        a, b = rng.uniform(-10, 10), rng.uniform(0.1, 10)
        x, y = Interval(a), Interval(b)
        assert (x * y).contains(Fraction(a) * Fraction(b))
        assert (x / y).contains(Fraction(a) / Fraction(b))
        assert (x - y).contains(Fraction(a) - Fraction(b))


def test_elementary_functions():
    assert (iv.sqrt(2) ** 2).contains(2)
    assert iv.log(iv.exp(1)).contains(1)
    assert sp.sin(PI).contains(0)
    assert sp.cos(PI).contains(-1)
    assert (4 * sp.atan(1)).overlaps(PI)


def test_division_by_zero_interval():
    with pytest.raises(DomainError):
        Interval(1) / Interval(-1, 1)


def test_log_domain():
    with pytest.raises(DomainError):
        iv.log(Interval(-1, 2))


def test_invalid_interval():
    with pytest.raises(DomainError):
        Interval(2, 1)


def test_subdivide_covers():
    pieces = Interval(0, 1).subdivide(0.3)
    assert pieces[0].lo == 0 and pieces[-1].hi == 1
    assert all(p.width <= 0.3 + 1e-15 for p in pieces)
    assert all(a.hi == b.lo for a, b in zip(pieces, pieces[1:]))


def test_unit_root_quarter():
    z = unit_root(Fraction(1, 4))
    assert z.contains(1j)


def test_complex_arg_branches():
    z = ComplexInterval(-1, Interval(-0.1, 0.1))
    with pytest.raises(DomainError):
        z.arg()
    assert z.arg_near_pi().contains(math.pi)


def test_jet_derivatives():
    x = Jet.variable(Interval(0.5))
    y = jsin(x) * x
    assert y.d.overlaps(Interval(math.cos(0.5) * 0.5 + math.sin(0.5)))


def test_midpoint_rule_encloses_integral():
    value = midpoint_rule(jsin, Interval(0, 1))
    assert value.contains(1 - math.cos(1))


def test_enclose_range_quadratic():
    f = lambda box: (box[0] - 0.5) ** 2
    r = enclose_range(f, Interval(0, 2), tol=1e-6)
    assert r.lo <= 0 <= r.lo + 1e-5
    assert 2.25 <= r.hi <= 2.25 + 1e-5


def test_enclose_range_budget():
    f = lambda box: sp.sin(1 / box[0])
    with pytest.raises(BudgetExceeded) as info:
        enclose_range(f, Interval(0.001, 1), tol=1e-12, budget=50)
    assert info.value.best is not None


def test_prove_upper_bound_proved_and_disproved():
    f = lambda box: box[0] * (1 - box[0])
    outcome = prove_upper_bound(f, 0.26, Interval(0, 1), budget=10000)
    assert outcome.proved
    assert outcome.certificate and all(m.hi <= 0 for _, m in outcome.certificate)

    outcome = prove_upper_bound(f, 0.2, Interval(0, 1), budget=10000)
    assert outcome.status == "disproved"
    assert outcome.witness is not None


def test_box_split_keeps_volume():
    box = Box([(0, 1), (0, 4)])
    left, right = box.split()
    assert box.widest() == 1
    assert left[1].hi == right[1].lo


def test_below_accepts_tightest_enclosure():
    bound = Fraction(5, 7)
    assert not iv.below(Interval.from_fraction(bound), bound)
    assert not iv.below(Interval(bound, 1), bound)
    assert iv.below(Interval(0.7, 1), bound)
