"""
定理形式的界 |N - 主项| ≤ 0.22737ℓ + 2log(1+ℓ) - 0.5，以及推导 (C₁, C₂)
"""

import math
from fractions import Fraction
from typing import NamedTuple, Optional

from loguru import logger

from config import BoundConfig, IntervalConfig
from tools.exception import DomainError

from ..interval import interval as iv
from ..interval.interval import E, PI, TWO_PI, Box, Interval
from ..interval.prover import enclose_range
from .params import compute_ell, main_term

SLOPE = Fraction(22737, 100000)
SMALL_ELL = Fraction(1567, 1000)
# 有本原特征的最小导子（q = 2 没有）
Q_MIN = 3


class TheoremBound(NamedTuple):
    lower: Interval
    upper: Interval
    n_zero: bool

    @property
    def min_zeros(self) -> int:
        """N 为整数，下界 > 0 时至少 ⌈lower.lo⌉ 个零点"""
        return math.ceil(self.lower.lo) if self.lower.lo > 0 else 0

    @property
    def max_zeros(self) -> int:
        return 0 if self.n_zero else max(math.floor(self.upper.hi), 0)


def theorem_width(ell) -> Interval:
    """0.22737ℓ + 2log(1+ℓ) - 0.5"""
    ell = Interval.coerce(ell)
    return SLOPE * ell + 2 * iv.log(1 + ell) - 0.5


def theorem_bound(q: int, T, a: Optional[int] = None) -> TheoremBound:
    """
    定理给出的 N(T,χ) 上下界

    a 为 None 时对两种奇偶性取凸包。ℓ ≤ 1.567 时 N = 0。
    """
    if q < 2:
        raise DomainError(f"导子必须大于1: {q}")
    T = Interval.coerce(T)
    if iv.below(T, IntervalConfig.t_min):
        raise DomainError(f"需要 T ≥ 5/7: {T}")
    ell = compute_ell(q, T)
    if ell.hi <= SMALL_ELL:
        return TheoremBound(Interval(0.0), Interval(0.0), True)

    parities = (1, -1) if a is None else (1 if a == 0 else -1,)
    main = Interval.hull_of(main_term(q, T, s) for s in parities)
    width = theorem_width(ell)
    upper = main + width
    lower = main - width
    lower = Interval(max(lower.lo, 0.0), max(lower.hi, 0.0))
    if ell.lo <= SMALL_ELL:
        # ℓ 的包围跨越 1.567，两种情形都可能
        lower = Interval(0.0, lower.hi)
        upper = Interval(0.0, max(upper.hi, 0.0))
    return TheoremBound(lower, upper, False)


# ---- (C₁, C₂) ----

_LOG_2PI_E = iv.log(TWO_PI * E)
# log qT ≥ ℓ + log(2π·5/19)
_X_OFFSET = iv.log(TWO_PI * Fraction(5, 19))


def _theorem_sup(C1: Interval) -> tuple[Interval, Interval]:
    """
    sup_{ℓ>1.567} W(ℓ) + 1/4 - C₁(ℓ + log(10π/19))

    函数关于 ℓ 凹，驻点 ℓ* = 2/(C₁-0.22737) - 1，落在区域外时取边界 1.567。
    """
    def f(ell: Interval) -> Interval:
        return theorem_width(ell) + 0.25 - C1 * (ell + _X_OFFSET)

    ell_star = 2 / (C1 - SLOPE) - 1
    if ell_star.lo <= SMALL_ELL:
        boundary = Interval.from_fraction(SMALL_ELL)
        value = f(boundary)
        if ell_star.hi > SMALL_ELL:
            value = value.hull(f(Interval(float(SMALL_ELL), ell_star.hi)))
        return value, boundary
    return f(ell_star), ell_star


def _small_sup(C1: Interval, budget: int) -> Interval:
    """
    ℓ ≤ 1.567 时 N = 0，需要 |(T/π)(x - log 2πe)| ≤ C₁x + C₂，x = log qT

    对固定 T，x 的可行范围是 [log(3T), 1.567 + log(2πT/(T+2))]，函数关于 x 凸，取两端。
    """
    t_hi = (TWO_PI * iv.exp(Interval.from_fraction(SMALL_ELL)) / Q_MIN - 2).hi
    domain = Box([Interval(IntervalConfig.t_min, t_hi)])

    def at(x: Interval, T: Interval) -> Interval:
        return T / PI * iv.iv_abs(x - _LOG_2PI_E) - C1 * x

    def low_end(box: Box) -> Interval:
        T = box[0]
        return at(iv.log(Q_MIN * T), T)

    def high_end(box: Box) -> Interval:
        T = box[0]
        return at(SMALL_ELL + iv.log(TWO_PI * T / (T + 2)), T)

    tol = 1e-6
    return Interval.hull_of([enclose_range(low_end, domain, tol, budget),
                             enclose_range(high_end, domain, tol, budget)])


def c2_breakdown(C1, budget: int = 100000) -> dict:
    C1_iv = Interval.coerce(C1)
    if not C1_iv.certainly_gt(SLOPE):
        raise DomainError(f"C₁ 必须大于 {float(SLOPE)}，否则上确界为无穷: {C1}")
    theorem_part, ell_star = _theorem_sup(C1_iv)
    small_part = _small_sup(C1_iv, budget)
    return {
        "C1": float(C1),
        "theorem_regime": theorem_part.to_pair(),
        "ell_star": ell_star.to_pair(),
        "small_regime": small_part.to_pair(),
        "C2": max(theorem_part.hi, small_part.hi),
    }


def derive_C2(C1, budget: int = 100000) -> float:
    """
    对所有 q > 1, T ≥ 5/7 成立 |N - (T/π)log(qT/2πe)| ≤ C₁·log qT + C₂ 的 C₂

    χ(-1)/4 的偏移计入 +1/4；ℓ ≤ 1.567 的 N = 0 区域一并取上确界。
    """
    result = c2_breakdown(C1, budget)
    logger.debug(f"C₁ = {C1}: {result}")
    return result["C2"]


def c1c2_curve(C1_values) -> list[tuple[float, float]]:
    """(C₁, C₂) 曲线"""
    return [(float(C1), derive_C2(C1)) for C1 in C1_values]


def default_c1_grid(points: int = 64, hi: float = 0.6) -> list[float]:
    lo = BoundConfig.theorem_slope
    step = (hi - lo) / points
    return [lo + step * (i + 1) for i in range(points)]
