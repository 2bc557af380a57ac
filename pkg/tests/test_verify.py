import pytest

from lbounds.bound.verify import pick_regime, t_part, verify_assembly
from lbounds.interval.interval import Interval
from tools.exception import LBoundsError, RegimeMismatch


def test_pick_regime():
    assert pick_regime(30, 100) == "large"
    assert pick_regime(6.0, 20.0) == "middle"
    with pytest.raises(RegimeMismatch):
        pick_regime(3.0, 10.0)


def test_rejects_unbounded_range():
    with pytest.raises(LBoundsError):
        verify_assembly(30, float("inf"))
    with pytest.raises(LBoundsError):
        verify_assembly(40, 30)


def test_t_part_is_finite():
    value = t_part(0, Interval(0.3), Interval(0.5), Interval(0.0, 0.1))
    assert value.is_finite()


@pytest.mark.slow
def test_middle_slice_proved():
    outcome = verify_assembly(6.0, 6.5, regime="middle", budget=5000)
    assert outcome.proved
    assert all(status == "proved" for status in outcome.claims.values())


@pytest.mark.slow
def test_large_slice_with_majorants():
    outcome = verify_assembly(30.0, 40.0, regime="large", budget=5000, majorants=True)
    assert outcome.proved
