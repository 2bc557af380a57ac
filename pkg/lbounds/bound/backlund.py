"""
Backlund 配对与 Jensen 和

S = lim S_m(c,r) ≤ log(ζ(c)/ζ(2c)) + (1/π)∫_0^π F
|arg L(σ+iT)|_{σ=σ₁}^{1/2}| ≤ π·S/(2ρ) + E_δ/2 [+ (E_{σ₁}-E_δ)/2·(1 - log(1+√2)/ρ)]
其中 ρ = log(r/(c-1/2))。两种模式的条件都在此检查，不满足时拒绝。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from loguru import logger

from tools.exception import PreconditionFailure

from ..interval import interval as iv
from ..interval.interval import PI, SQRT2, Interval
from ..special.gamma import E_of
from ..special.zeta import log_zeta
from .jensen import JensenResult, jensen_integral
from .params import BoundParams

_LOG_SILVER = iv.log(1 + SQRT2)


def rho_of(p: BoundParams) -> Interval:
    """ρ = log(r/(c-1/2))"""
    if p.c_exact is not None:
        return iv.log(Interval.from_fraction(p.r_exact / (p.c_exact - Fraction(1, 2))))
    return iv.log(p.r / (p.c - 0.5))


def jensen_preconditions(p: BoundParams) -> list[str]:
    """c-r < 1/2 < 1 < c < σ₁ < c+r"""
    failures = []
    if not (p.c - p.r).certainly_lt(0.5):
        failures.append("c-r < 1/2")
    if not p.c.certainly_gt(1):
        failures.append("1 < c")
    if not p.c.certainly_lt(p.sigma1):
        failures.append("c < σ₁")
    if not p.sigma1.certainly_lt(p.c + p.r):
        failures.append("σ₁ < c+r")
    return failures


def backlund_preconditions(p: BoundParams, mode: Optional[str] = None) -> list[str]:
    mode = mode or p.mode
    failures = []
    if mode != p.mode:
        failures.append(f"σ₁ 与 δ 按 {p.mode} 模式计算，不能用于 {mode} 模式")
    if mode == "simple":
        if not p.c.certainly_gt(1):
            failures.append("c > 1")
        if not p.c.certainly_lt(p.r):
            failures.append("c < r")
        if not p.delta.certainly_ge(0):
            failures.append("δ ≥ 0")
        if not p.delta.certainly_lt(4.5):
            failures.append("δ < 9/2")
    elif mode == "inelegant":
        if not p.r.certainly_gt((1 + SQRT2) * (p.c - 0.5)):
            failures.append("r > (1+√2)(c-1/2)")
        if not p.c.certainly_gt(1):
            failures.append("c > 1")
        if not p.delta.certainly_ge(0.25):
            failures.append("δ ≥ 1/4")
        if not p.delta.certainly_lt(p.sigma1):
            failures.append("δ < σ₁")
        if not p.sigma1.certainly_lt(4.5):
            failures.append("σ₁ < 9/2")
    else:
        failures.append(f"未知模式 {mode}")
    return failures


@dataclass
class SBound:
    zeta_ratio: Interval
    jensen: JensenResult

    @property
    def total(self) -> Interval:
        return self.zeta_ratio + self.jensen.bound / PI

    def to_dict(self) -> dict:
        return {"zeta_ratio": self.zeta_ratio.to_pair(), "jensen": self.jensen.to_dict(),
                "total": self.total.to_pair()}


def zeta_ratio(c) -> Interval:
    """log(ζ(c)/ζ(2c))"""
    c = Interval.coerce(c)
    return log_zeta(c) - log_zeta(2 * c)


def S_limit_bound(p: BoundParams, path: str = "auto", **quad) -> SBound:
    """lim S_m(c,r) 的上界"""
    failures = jensen_preconditions(p)
    if failures:
        raise PreconditionFailure("Jensen 公式的参数条件不满足", failures=failures)
    return SBound(zeta_ratio(p.c), jensen_integral(p, path=path, **quad))


@dataclass
class BacklundTerms:
    """arg 界 = slope·S + constant"""
    mode: str
    rho: Interval
    E_delta: Interval
    E_sigma1: Optional[Interval]
    slope: Interval
    constant: Interval

    def bound(self, S) -> Interval:
        return self.slope * Interval.coerce(S) + self.constant

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "rho": self.rho.to_pair(),
            "E_delta": self.E_delta.to_pair(),
            "E_sigma1": self.E_sigma1.to_pair() if self.E_sigma1 is not None else None,
            "slope": self.slope.to_pair(),
            "constant": self.constant.to_pair(),
        }


def backlund_terms(p: BoundParams, mode: Optional[str] = None) -> BacklundTerms:
    mode = mode or p.mode
    failures = backlund_preconditions(p, mode)
    if failures:
        logger.warning(f"Backlund {mode} 模式条件不满足: {failures}")
        raise PreconditionFailure(f"Backlund {mode} 模式的参数条件不满足", failures=failures)
    rho = rho_of(p)
    E_delta = E_of(p.a, p.delta, p.T)
    slope = PI / (2 * rho)
    constant = E_delta / 2
    E_sigma1 = None
    if mode == "inelegant":
        E_sigma1 = E_of(p.a, p.sigma1 - 0.5, p.T)
        constant = constant + (E_sigma1 - E_delta) / 2 * (1 - _LOG_SILVER / rho)
    return BacklundTerms(mode, rho, E_delta, E_sigma1, slope, constant)


def arg_segment_bound(p: BoundParams, S, mode: Optional[str] = None) -> Interval:
    """σ ∈ [1/2, σ₁] 上 |arg L(σ+iT)| 变化的上界"""
    return backlund_terms(p, mode).bound(S)
