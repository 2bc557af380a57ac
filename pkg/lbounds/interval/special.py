"""
区间初等超越函数: sin, cos, atan, log1p, arcsin, arccos

libm 端点结果向外推 2 ulp；atan 与 log1p 额外与代数上下界求交，
保证 atan(0) 与 log1p(0) 精确为 0。
"""

import math

from tools.exception import DomainError

from .interval import HALF_PI, PI, Interval, down2, sqrt, up2

_UNIT = Interval(-1.0, 1.0)


def _trig(x: Interval, phase_odd: bool, fn) -> Interval:
    """phase_odd=False 时临界点为 kπ (cos)，否则为 (k+1/2)π (sin)"""
    if not x.is_finite() or x.width >= 2 * PI.hi:
        return _UNIT
    a, b = fn(x.lo), fn(x.hi)
    lo, hi = down2(min(a, b)), up2(max(a, b))
    k_lo = math.floor(x.lo / math.pi) - 1
    k_hi = math.ceil(x.hi / math.pi) + 1
    for k in range(k_lo, k_hi + 1):
        point = Interval(2 * k + 1) * HALF_PI if phase_odd else Interval(k) * PI
        if point.hi < x.lo or point.lo > x.hi:
            continue
        # cos(kπ) = (-1)^k, sin((k+1/2)π) = (-1)^k
        if k % 2 == 0:
            hi = 1.0
        else:
            lo = -1.0
    return Interval(max(lo, -1.0), min(hi, 1.0))


def cos(x) -> Interval:
    x = Interval.coerce(x)
    if x.lo == 0.0 and x.hi == 0.0:
        return Interval(1.0)
    return _trig(x, False, math.cos)


def sin(x) -> Interval:
    x = Interval.coerce(x)
    if x.lo == 0.0 and x.hi == 0.0:
        return Interval(0.0)
    return _trig(x, True, math.sin)


def _atan_lower_pos(y: float) -> float:
    # 3y/(1+2√(1+y²)) ≤ atan y, y ≥ 0
    Y = Interval(y)
    return (3 * Y / (1 + 2 * sqrt(1 + Y * Y))).lo


def _atan_upper_pos(y: float) -> float:
    # atan y ≤ πy/(1+2√(1+y²)), y ≥ 0
    Y = Interval(y)
    return (PI * Y / (1 + 2 * sqrt(1 + Y * Y))).hi


def atan_algebraic(x) -> Interval:
    """仅用代数上下界的 atan 包围，x 需有限"""
    x = Interval.coerce(x)
    lo = _atan_lower_pos(x.lo) if x.lo >= 0 else -_atan_upper_pos(-x.lo)
    hi = _atan_upper_pos(x.hi) if x.hi >= 0 else -_atan_lower_pos(-x.hi)
    return Interval(lo, hi)


def atan(x) -> Interval:
    x = Interval.coerce(x)
    lo, hi = down2(math.atan(x.lo)), up2(math.atan(x.hi))
    if math.isfinite(x.lo):
        lo = max(lo, _atan_lower_pos(x.lo) if x.lo >= 0 else -_atan_upper_pos(-x.lo))
    if math.isfinite(x.hi):
        hi = min(hi, _atan_upper_pos(x.hi) if x.hi >= 0 else -_atan_lower_pos(-x.hi))
    return Interval(max(lo, -HALF_PI.hi), min(hi, HALF_PI.hi))


def _log1p_lower_pos(x: float) -> float:
    # 2x/(2+x) ≤ log(1+x), x ≥ 0
    X = Interval(x)
    return (2 * X / (2 + X)).lo


def _log1p_upper_pos(x: float) -> float:
    # log(1+x) ≤ x(6+x)/(6+4x), x ≥ 0
    X = Interval(x)
    return (X * (6 + X) / (6 + 4 * X)).hi


def log1p(x) -> Interval:
    x = Interval.coerce(x)
    if x.lo <= -1.0:
        raise DomainError(f"log1p 的参数下端不大于 -1: {x}")
    lo = down2(math.log1p(x.lo))
    hi = up2(math.log1p(x.hi)) if math.isfinite(x.hi) else math.inf
    if x.lo >= 0:
        lo = max(lo, _log1p_lower_pos(x.lo))
    if 0 <= x.hi < math.inf:
        hi = min(hi, _log1p_upper_pos(x.hi))
    return Interval(lo, hi)


def _check_unit(x: Interval, name: str):
    if x.lo < -1.0 or x.hi > 1.0:
        raise DomainError(f"{name} 的参数超出 [-1, 1]: {x}")


def arcsin(x) -> Interval:
    x = Interval.coerce(x)
    _check_unit(x, "arcsin")
    lo = 0.0 if x.lo == 0.0 else down2(math.asin(x.lo))
    hi = 0.0 if x.hi == 0.0 else up2(math.asin(x.hi))
    return Interval(max(lo, -HALF_PI.hi), min(hi, HALF_PI.hi))


def arccos(x) -> Interval:
    x = Interval.coerce(x)
    _check_unit(x, "arccos")
    lo = 0.0 if x.hi == 1.0 else down2(math.acos(x.hi))
    hi = up2(math.acos(x.lo))
    return Interval(max(lo, 0.0), min(hi, PI.hi))


_SPECIAL = {
    "sin": sin,
    "cos": cos,
    "atan": atan,
    "log1p": log1p,
    "arcsin": arcsin,
    "arccos": arccos,
}


def iv_special(fn: str, x) -> Interval:
    """按名称调用区间超越函数"""
    try:
        return _SPECIAL[fn](Interval.coerce(x))
    except KeyError:
        raise DomainError(f"未知的区间函数: {fn}") from None
