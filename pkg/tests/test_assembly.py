import json
from fractions import Fraction

import pytest

from lbounds.bound.assembly import assemble_N_bound, rigorous_floor
from lbounds.bound.params import select_params
from lbounds.interval.interval import Interval
from tools.exception import PreconditionFailure

SLACK = 1e-3


@pytest.fixture(scope="module")
def example_report(example_params):
    return assemble_N_bound(example_params, path="auto")


def test_worked_example_terms(example_report):
    r = example_report
    assert r.first_two.hi <= 2.1013434 + SLACK
    assert r.zeta_sigma1_term.hi <= 0.4883702 + SLACK
    assert r.S.zeta_ratio.hi <= 1.0682664 + SLACK
    assert r.S.jensen.bound.hi <= 13.8132592 + SLACK


def test_worked_example_floor(example_report):
    assert example_report.total.hi < 8
    assert example_report.floor_k == 7
    assert example_report.kappa is not None


def test_report_is_json_serializable(example_report):
    record = json.loads(json.dumps(example_report.to_dict()))
    assert record["floor_k"] == 7
    assert record["params"]["c_exact"] == "1347/1024"


def test_rigorous_floor_straddle():
    k, note = rigorous_floor(Interval(6.9999, 7.0001))
    assert k is None and "7" in note
    assert rigorous_floor(Interval(7.2, 7.9))[0] == 7


def test_lower_bound_below_upper(example_report):
    assert example_report.lower.lo <= example_report.total.hi


def test_precondition_failure_lists_inequalities():
    p = select_params(25252, 1, 0, regime="custom", c=Fraction(1), r=Fraction(2))
    with pytest.raises(PreconditionFailure) as info:
        assemble_N_bound(p, path="lemma")
    assert "1 < c" in info.value.failures
    assert info.value.to_record()["exit_code"] == 2


@pytest.mark.slow
def test_worked_example_direct_path(example_params):
    report = assemble_N_bound(example_params, path="direct")
    assert report.total.hi < 8
    assert report.S.jensen.path == "direct"


@pytest.mark.slow
@pytest.mark.parametrize("k", [5, 6, 8, 9])
def test_table_column_floors(k):
    published = {5: 1616, 6: 6256, 8: 105597, 9: 455195}[k]
    p = select_params(published, 1, 0, regime="table", k=k)
    report = assemble_N_bound(p)
    assert report.total.hi < k + 1


@pytest.mark.slow
def test_bottom_of_T_range_assembles():
    p = select_params(3289, Fraction(5, 7), 0, regime="table", k=5)
    report = assemble_N_bound(p)
    assert report.total.hi < 6
