"""
辐角原理计数

    N(T,χ) = (T/π)·log(q/π) + (2/π)·Im lnΓ(1/4 + a/2 + iT/2)
             + (1/π)·arg L(s,χ)|_{1/2-iT}^{1/2+iT}

辐角沿 1/2-iT → 3-iT → 3+iT → 1/2+iT 连续跟踪。σ=3 竖线上 |log L| ≤ log ζ(3)，
直接取主值；水平段切成小段，每段上 L 的矩形包围不含0时用同一分支求端点辐角之差，
含0时对半切分。
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from loguru import logger
from sympy import primerange

from config import ScanConfig
from tools.exception import BudgetExceeded, DomainError, LBoundsError, NudgeNeeded

from ..characters.character import DirichletCharacter
from ..interval import interval as iv
from ..interval import special as sp
from ..interval.cinterval import ComplexInterval
from ..interval.interval import PI, Interval
from ..special.gamma import im_lngamma
from ..special.zeta import log_zeta
from .lvalue import l_value, require_primitive

SIGMA_RIGHT = 3.0


@dataclass
class CountResult:
    N: int
    T: float
    character_label: str
    audit: dict = field(default_factory=dict)
    nudges: int = 0

    def to_dict(self) -> dict:
        return {"N": self.N, "T": self.T, "character_label": self.character_label,
                "nudges": self.nudges, "audit": self.audit}


def euler_seed_bound(P: int = 1000) -> Interval:
    """
    Σ_p arcsin(p^{-3}) 的包围，|arg L(3+it)| 不超过它

    p > P 的尾项用 arcsin x ≤ x + x³ 与 Σ_{n>P} n^{-k} ≤ 1/((k-1)P^{k-1}) 控制。
    """
    total = Interval(0.0)
    for p in primerange(2, P + 1):
        total = total + sp.arcsin(1 / iv.pow_int(Interval(int(p)), 3))
    tail = 1 / (2 * iv.pow_int(Interval(P), 2)) + 1 / (8 * iv.pow_int(Interval(P), 8))
    return total + Interval(0.0, tail.hi)


def _branch_arg(box: ComplexInterval):
    """在矩形 box 上连续的辐角分支"""
    if box.re.hi < 0 and box.im.contains(0.0):
        return ComplexInterval.arg_near_pi
    return ComplexInterval.arg


class _SegmentTracker:
    """沿 σ 从 SIGMA_RIGHT 到 1/2 跟踪 arg L(σ+it)"""

    def __init__(self, chi: DirichletCharacter, t: Interval, steps: int, halvings: int):
        self.chi = chi
        self.t = t
        self.steps = steps
        self.halvings = halvings
        self._points: dict[float, ComplexInterval] = {}
        self.pieces = 0

    def value(self, sigma: float) -> ComplexInterval:
        if sigma not in self._points:
            self._points[sigma] = l_value(ComplexInterval(sigma, self.t), self.chi)
        return self._points[sigma]

    def piece_delta(self, lo: float, hi: float) -> Optional[Interval]:
        """arg L(lo+it) - arg L(hi+it)，无法认证时返回 None"""
        box = l_value(ComplexInterval(Interval(lo, hi), self.t), self.chi)
        self.pieces += 1
        if box.contains_zero():
            return None
        branch = _branch_arg(box)
        try:
            return branch(self.value(lo)) - branch(self.value(hi))
        except DomainError:
            return None

    def change(self) -> Interval:
        width = (SIGMA_RIGHT - 0.5) / self.steps
        stack = [(0.5 + i * width, 0.5 + (i + 1) * width, 0) for i in range(self.steps)]
        total = Interval(0.0)
        while stack:
            lo, hi, depth = stack.pop()
            delta = self.piece_delta(lo, hi)
            if delta is not None:
                total = total + delta
                continue
            if depth >= self.halvings:
                raise NudgeNeeded(f"{self.chi.label}: σ ∈ [{lo}, {hi}], t={self.t} 附近无法排除零点")
            mid = (lo + hi) / 2
            stack.append((lo, mid, depth + 1))
            stack.append((mid, hi, depth + 1))
        return total


def horizontal_arg_change(chi: DirichletCharacter, t, steps: int = ScanConfig.segment_steps,
                          halvings: int = ScanConfig.segment_halvings) -> Interval:
    """arg L(1/2+it) - arg L(3+it)，沿水平线连续变化"""
    tracker = _SegmentTracker(chi, Interval.coerce(t), steps, halvings)
    change = tracker.change()
    logger.debug(f"{chi.label}: t={t} 水平段 {tracker.pieces} 块，辐角变化 {change}")
    return change


def _count_once(T: float, chi: DirichletCharacter, steps: int, halvings: int) -> tuple[int, dict]:
    q, a = chi.modulus, chi.parity
    T_iv = Interval(T)
    gamma_term = 2 / PI * im_lngamma(0.25 + a / 2, T_iv / 2, shift=ScanConfig.stirling_shift)
    main = T_iv / PI * iv.log(q / PI)

    upper = horizontal_arg_change(chi, T_iv, steps, halvings)
    lower = horizontal_arg_change(chi, -T_iv, steps, halvings)
    right_top = l_value(ComplexInterval(SIGMA_RIGHT, T_iv), chi).arg()
    right_bottom = l_value(ComplexInterval(SIGMA_RIGHT, -T_iv), chi).arg()
    vertical = right_top - right_bottom
    variation = upper - lower + vertical
    total = main + gamma_term + variation / PI

    k_lo, k_hi = math.ceil(total.lo), math.floor(total.hi)
    audit = {
        "main": main.to_pair(),
        "gamma": gamma_term.to_pair(),
        "arg_top": upper.to_pair(),
        "arg_bottom": lower.to_pair(),
        "arg_right": vertical.to_pair(),
        "total": total.to_pair(),
    }
    if k_lo > k_hi:
        raise LBoundsError(f"{chi.label}: 计数包围 {total} 不含整数")
    if k_lo < k_hi:
        raise BudgetExceeded(f"{chi.label}: 计数包围 {total} 含多个整数", best=total)
    return k_lo, audit


def arg_principal_count(T: float, chi: DirichletCharacter, nudge: bool = True,
                        steps: int = ScanConfig.segment_steps,
                        halvings: int = ScanConfig.segment_halvings) -> CountResult:
    """
    N(T,χ)，T 恰好落在零点附近时按 1+2^{-20} 的倍数向上微调
    """
    require_primitive(chi)
    if T <= 0:
        raise DomainError(f"需要 T > 0: {T}")
    tries = ScanConfig.nudge_tries if nudge else 1
    height = float(T)
    for attempt in range(tries):
        try:
            N, audit = _count_once(height, chi, steps, halvings)
        except NudgeNeeded:
            if attempt + 1 == tries:
                raise
            height *= ScanConfig.nudge_factor
            logger.debug(f"{chi.label}: T 微调到 {height!r}")
            continue
        logger.debug(f"{chi.label}: N({height}) = {N}")
        return CountResult(N, height, chi.label, audit, attempt)
    raise NudgeNeeded(f"{chi.label}: 微调 {tries} 次仍无法计数")


def arg_on_vertical(sigma1, T: float, chi: DirichletCharacter, points: int = 64) -> dict:
    """在 σ₁ 竖线上抽样检查 |arg L(σ₁+it)| ≤ log ζ(σ₁)"""
    sigma1 = Interval.coerce(sigma1)
    bound = log_zeta(sigma1)
    worst = 0.0
    for i in range(points + 1):
        t = -T + 2 * T * i / points
        arg = l_value(ComplexInterval(sigma1, t), chi).arg()
        worst = max(worst, iv.iv_abs(arg).hi)
    return {"character": chi.label, "sigma1": sigma1.to_pair(), "max_arg": worst,
            "bound": bound.hi, "holds": worst <= bound.hi}
