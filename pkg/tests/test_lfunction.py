import math
from types import SimpleNamespace

import pytest

from lbounds.characters.character import enumerate_characters, enumerate_primitive
from lbounds.interval.cinterval import ComplexInterval
from lbounds.interval.interval import Interval
from lbounds.lfunction.counting import arg_on_vertical, arg_principal_count, euler_seed_bound
from lbounds.lfunction.hardy import hardy_Z_complex, sign_of
from lbounds.lfunction.hurwitz import hurwitz_zeta
from lbounds.lfunction.lvalue import fe_residual, l_value
from lbounds.lfunction.majorant import l_upper_bound
from lbounds.lfunction.scanner import ZeroRecord, _refine, count_from_records, scan_zeros, t_for_ell
from tools.exception import CompletenessFailure, DomainError, NotPrimitive, PoleProximity

CATALAN = 0.915965594177219015


def test_hurwitz_half():
    z = hurwitz_zeta(2, 0.5)
    assert z.re.overlaps(Interval(math.pi ** 2 / 2))
    assert z.im.contains(0)
    assert z.re.width < 1e-10


def test_hurwitz_at_one_is_riemann_zeta():
    z = hurwitz_zeta(ComplexInterval(3, 0), 1)
    assert z.re.overlaps(Interval(1.2020569031595942))


def test_hurwitz_pole_and_domain():
    with pytest.raises(PoleProximity):
        hurwitz_zeta(ComplexInterval(Interval(0.99, 1.01), 0), 0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 1.5)


def test_l_value_catalan(chi4):
    L = l_value(2, chi4)
    assert L.re.overlaps(Interval(CATALAN))
    assert L.im.contains(0)


def test_l_value_sandwich(chi5_quartic):
    zeta2, zeta4 = math.pi ** 2 / 6, math.pi ** 4 / 90
    size = l_value(ComplexInterval(2, 5), chi5_quartic).abs()
    assert zeta4 / zeta2 <= size.hi and size.lo <= zeta2


def test_l_value_needs_primitive():
    chi = next(c for c in enumerate_characters(9) if not c.is_principal and c.conductor == 3)
    with pytest.raises(NotPrimitive):
        l_value(2, chi)


def test_reflection_agrees_with_direct(chi5_quartic):
    s = ComplexInterval(-1.5, 2.0)
    direct = l_value(s, chi5_quartic)
    reflected = l_value(s, chi5_quartic, reflect=True)
    assert direct.re.overlaps(reflected.re) and direct.im.overlaps(reflected.im)


@pytest.mark.parametrize("q", [5, 7, 8])
def test_functional_equation_residual(q):
    for chi in enumerate_primitive(q):
        assert fe_residual(ComplexInterval(0.3, 4.0), chi).contains_zero()


def test_hardy_Z_is_real(chi5_quartic, chi3):
    for chi in (chi5_quartic, chi3):
        for t in (0.5, 3.0, 7.25):
            assert hardy_Z_complex(t, chi).im.contains(0.0)


def test_sign_of():
    assert sign_of(Interval(1, 2)) == 1
    assert sign_of(Interval(-2, -1)) == -1
    assert sign_of(Interval(-1, 1)) == 0


def test_euler_seed_bound():
    assert euler_seed_bound().hi < 0.176


def test_arg_on_vertical(chi5_quartic):
    report = arg_on_vertical(1.3, 2.0, chi5_quartic, points=8)
    assert report["holds"]


def test_majorant_product_branch():
    s, q = complex(-1, 3), 7
    zeta2 = math.pi ** 2 / 6
    expected = zeta2 * (q / (2 * math.pi)) ** 1.5 * abs(s + 2) ** 0.5 * abs(s)
    bound = l_upper_bound(ComplexInterval(-1, 3), q, 0.1)
    assert bound >= expected
    assert bound <= expected * (1 + 1e-9)


def test_majorant_right_of_one():
    assert l_upper_bound(ComplexInterval(2, 10), 7, 0.1) == pytest.approx(math.pi ** 2 / 6)


def test_majorant_domain():
    with pytest.raises(DomainError):
        l_upper_bound(ComplexInterval(0.5, 1), 1, 0.1)
    with pytest.raises(DomainError):
        l_upper_bound(ComplexInterval(0.5, 1), 7, 0.7)


def test_t_for_ell():
    t = t_for_ell(100, 6.0)
    assert abs(100 * (t + 2) / (2 * math.pi) - math.exp(6.0)) < 1e-6


def test_zero_record_sort_and_round_trip():
    a = ZeroRecord("7.1", 7, 1, 2.0, 2.0 + 1e-10)
    b = ZeroRecord("7.3", 7, 1, -1.0, -1.0 + 1e-10)
    c = ZeroRecord("5.2", 5, 1, 3.0, 3.0 + 1e-10)
    assert sorted([b, a, c], key=ZeroRecord.sort_key) == [c, a, b]
    assert ZeroRecord.from_record(a.to_record()) == a
    assert b.sign_of_gamma == "-"


def test_count_from_records():
    records = [ZeroRecord("7.3", 7, 1, -1.0, -0.99), ZeroRecord("7.3", 7, 1, 1.5, 1.51)]
    assert count_from_records(records, 1.0, real=False) == 1
    assert count_from_records(records, 2.0, real=False) == 2
    with pytest.raises(CompletenessFailure):
        count_from_records(records, 1.505, real=False)



class _StepSign:
    """Z 的符号在 root 处由正变负，(blind_lo, blind_hi) 内无法判定"""

    def __init__(self, root, blind_lo=None, blind_hi=None):
        self.chi = SimpleNamespace(label="5.2")
        self.root, self.blind = root, (blind_lo, blind_hi)

    def sign(self, t):
        lo, hi = self.blind
        if lo is not None and lo < t < hi:
            return 0
        return 1 if t < self.root else -1


def test_refine_reaches_tolerance():
    lo, hi = _refine(_StepSign(0.3), 0.0, 1.0, 1, 1e-9)
    assert lo <= 0.3 <= hi
    assert hi - lo <= 1e-9


def test_refine_steps_around_unsettled_midpoint():
    lo, hi = _refine(_StepSign(0.3, 0.45, 0.55), 0.0, 1.0, 1, 1e-9)
    assert lo <= 0.3 <= hi and hi - lo <= 1e-9


def test_refine_refuses_wide_record():
    with pytest.raises(CompletenessFailure) as info:
        _refine(_StepSign(0.5, 0.4, 0.6), 0.0, 1.0, 1, 1e-9)
    lo, hi = info.value.candidates[0]
    assert lo <= 0.4 and hi >= 0.6


@pytest.mark.slow
def test_first_zero_mod_3(chi3):
    records = scan_zeros(chi3, 10.0)
    assert len(records) == 1
    assert 8.03 < records[0].ordinate_lo < 8.05
    assert records[0].isolation_width <= 1e-9


@pytest.mark.slow
def test_count_small_conductors_zero_free():
    for q in range(3, 11):
        for chi in enumerate_primitive(q, one_per_pair=True):
            assert arg_principal_count(1.0, chi).N == 0, chi.label


@pytest.mark.slow
def test_count_matches_scan_mod_3(chi3):
    assert arg_principal_count(10.0, chi3).N == 2
