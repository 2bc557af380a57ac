"""
在有限的 ℓ 区间上用分支定界复核定理的组装链

主断言（对 a ∈ {0,1}，v = 1/(T+2) ∈ [0, 7/19]）:
    A(ℓ) + h_a(ℓ, v) ≤ 0.22737ℓ + 2log(1+ℓ) - 0.5
    A(ℓ) = (2/π)log ζ(σ₁) + log(ζ(c)/ζ(2c))/ρ
           + [κ₁ℓ + (θ_{-η}-θ_{1+η})log ζ(1+η) + 右半段 + 左半段]/(πρ)
    h_a  = (2-a)/50·v/(1-2v) + ((640+216a)δ-112-39a)/1536·v/(3-(7-3a)v) + 2^{-10}
           + (κ4+κ5+Σκ6)/(πρ)·v
前两项分别是 |g(a,T)| 与 E_δ/π 的已证上界。
另外逐条复核参数链条件，large 区间还可复核各项的有理上界。
"""

import math
from fractions import Fraction
from typing import Callable, Optional

from loguru import logger

from config import BoundConfig
from tools.exception import LBoundsError, PreconditionFailure, RegimeMismatch

from ..interval import interval as iv
from ..interval.interval import PI, Box, Interval
from ..interval.prover import ProofOutcome, prove_upper_bound
from ..special.zeta import log_zeta
from .backlund import rho_of, zeta_ratio
from .jensen import Kappas, kappas, lemma_terms, theta_nodes
from .params import BoundParams, params_from_ell
from .theorem import theorem_width

V_MAX = Fraction(7, 19)
_INF = Interval(-math.inf, math.inf)


class _ParamCache:
    """按 ℓ 盒子缓存参数与 ℓ 相关的各项"""

    def __init__(self, regime: str):
        self.regime = regime
        self._params: dict = {}
        self._terms: dict = {}

    def params(self, ell: Interval) -> BoundParams:
        key = (ell.lo, ell.hi)
        if key not in self._params:
            self._params[key] = params_from_ell(ell, self.regime)
        return self._params[key]

    def terms(self, ell: Interval) -> tuple[Interval, Interval, Interval]:
        """(A, K, δ)"""
        key = (ell.lo, ell.hi)
        if key not in self._terms:
            p = self.params(ell)
            lt = lemma_terms(p)
            rho = rho_of(p)
            A = (2 / PI * log_zeta(p.sigma1) + zeta_ratio(p.c) / rho
                 + (lt.ell_term + lt.constant_term + lt.right_half + lt.left_half) / (PI * rho))
            K = lt.kappas.small_terms / (PI * rho)
            self._terms[key] = (A, K, p.delta)
        return self._terms[key]


def t_part(a: int, delta: Interval, K: Interval, v: Interval) -> Interval:
    """h_a(ℓ, v)"""
    g_part = Fraction(2 - a, 50) * v / (1 - 2 * v)
    E_part = ((640 + 216 * a) * delta - 112 - 39 * a) / 1536 * v / (3 - (7 - 3 * a) * v)
    return g_part + E_part + Fraction(1, 1024) + K * v


def _guarded(fn: Callable[[Box], Interval]) -> Callable[[Box], Interval]:
    # 宽盒子上参数条件可能无法判定，返回无信息包围让证明器继续细分
    def wrapped(box: Box) -> Interval:
        try:
            return fn(box)
        except (PreconditionFailure, RegimeMismatch):
            return _INF
    return wrapped


_kappa_cache: dict = {}


def _kappas_for(p: BoundParams) -> Kappas:
    key = (p.ell.lo, p.ell.hi, p.regime)
    if key not in _kappa_cache:
        _kappa_cache[key] = kappas(p)
    return _kappa_cache[key]


def _chain_claims(regime: str) -> dict[str, tuple[Callable[[BoundParams], Interval], bool]]:
    """名称 -> (余量函数, 是否严格)，断言为 余量 ≤ 0（严格时 < 0）"""
    claims = {
        "1+η ≤ c": (lambda p: 1 + p.eta - p.c, False),
        "c < r-η": (lambda p: p.c - p.r + p.eta, True),
        "θ_{1+η} ≤ 2.1": (lambda p: theta_nodes(p).one_eta - 2.1, False),
        "r > 2c-1": (lambda p: 2 * p.c - 1 - p.r, True),
        "c-r < 1-c": (lambda p: 2 * p.c - p.r - 1, True),
        "1-c < -η": (lambda p: 1 - p.c + p.eta, True),
        "c-r < 1/2": (lambda p: p.c - p.r - 0.5, True),
        "c < σ₁": (lambda p: p.c - p.sigma1, True),
        "σ₁ < c+r": (lambda p: p.sigma1 - p.c - p.r, True),
        "δ ≥ 0": (lambda p: -p.delta, False),
        "δ < 9/2": (lambda p: p.delta - 4.5, True),
        "η ≤ 1/2": (lambda p: p.eta - 0.5, False),
    }
    if regime == "middle":
        claims["c-r ≤ -1/2"] = (lambda p: p.c - p.r + 0.5, False)
        claims["c-r ≥ -3/2"] = (lambda p: -1.5 - p.c + p.r, False)
        claims["θ_{1+η} ≤ 1.62"] = (lambda p: theta_nodes(p).one_eta - 1.62, False)
    return claims


def _large_majorants() -> dict[str, tuple[Callable[[BoundParams], Interval], Callable[[Interval], Interval]]]:
    """large 区间各项的有理上界: 名称 -> (项, 上界)"""

    def zeta_terms(p):
        return 2 / PI * log_zeta(p.sigma1) - log_zeta(2 * p.c) / rho_of(p)

    def kappa1(p):
        return _kappas_for(p).k1 * p.ell / (PI * rho_of(p))

    def log_zeta_c(p):
        n = theta_nodes(p)
        coef = ((n.one_minus_c - n.minus_eta + n.one_eta) / PI - n.one_minus_c / (PI * p.J2)
                + Fraction(1, 2 * p.J1) + Fraction(1, p.J2) + Fraction(3, 2))
        return coef * log_zeta(p.c) / (2 * rho_of(p))

    def log_zeta_eta(p):
        n = theta_nodes(p)
        coef = (n.one_minus_c + n.minus_eta - n.one_eta) / PI - 0.5
        return coef * log_zeta(1 + p.eta) / (2 * rho_of(p))

    def kappa_over(name):
        return lambda p: getattr(_kappas_for(p), name) / (PI * rho_of(p))

    return {
        "(2/π)logζ(σ₁) - logζ(2c)/ρ": (
            zeta_terms,
            lambda l: (178 * l ** 2 + 17909 * l + 80807) / (4 * (128 * l ** 2 + 9637 * l + 164296))),
        "κ₁ℓ/(πρ)": (
            kappa1,
            lambda l: Fraction(238413, 2 ** 20) * l
            + (798 * l ** 2 + 135589 * l + 80396) / (16 * (32 * l ** 2 + 3105 * l + 38735))),
        "logζ(c) 各项": (
            log_zeta_c,
            lambda l: ((-1135 * l ** 2 - 214796 * l + 149201) / (512 * l ** 2 + 75117 * l + 496726)
                       + l / 2 ** 20 + 1365 * iv.log(l + 1) / 2 ** 10)),
        "logζ(1+η) 各项": (
            log_zeta_eta,
            lambda l: ((-182 * l ** 2 - 118430 * l + 79045) / (512 * l ** 2 + 91562 * l + 599789)
                       + l / 2 ** 22 + 529 * iv.log(l + 1) / 2 ** 10)),
        "κ₂/(πρ)": (
            kappa_over("k2"),
            lambda l: Fraction(635, 1024) - 9 * (113745 * l + 25384532) / (64 * (512 * l ** 2 + 150141 * l + 7149852))),
        "κ₃/(πρ)": (
            kappa_over("k3"),
            lambda l: Fraction(491, 1024) - (3346893 * l + 33179656) / (512 * (512 * l ** 2 + 21113 * l + 208616))),
        "κ₄/(πρ)": (
            kappa_over("k4"),
            lambda l: (-50 * l ** 2 - 1411 * l + 18281) / (512 * l ** 2 + 63962 * l + 800695)),
        "κ₅/(πρ)": (
            kappa_over("k5"),
            lambda l: (-42 * l ** 2 - 15293 * l - 961048) / (512 * l ** 2 + 113665 * l + 3255348)),
    }


def _combine(outcomes: dict[str, ProofOutcome], covered: tuple) -> ProofOutcome:
    statuses = [o.status for o in outcomes.values()]
    if all(s == "proved" for s in statuses):
        status = "proved"
    elif any(s == "disproved" for s in statuses):
        status = "disproved"
    else:
        status = "inconclusive"
    certificate, work, witness = [], 0, None
    for outcome in outcomes.values():
        certificate.extend(outcome.certificate)
        work += outcome.work
        witness = witness or outcome.witness
    return ProofOutcome(status, certificate, work, witness=witness, covered=covered,
                        claims={name: o.status for name, o in outcomes.items()})


def pick_regime(ell_lo: float, ell_hi: float) -> str:
    if ell_lo >= BoundConfig.large_ell:
        return "large"
    lo, hi = BoundConfig.middle_ell
    if lo <= ell_lo and ell_hi <= hi:
        return "middle"
    raise RegimeMismatch(f"[{ell_lo}, {ell_hi}] 不在 large 或 middle 区间内")


def verify_assembly(ell_lo: float, ell_hi: float, regime: Optional[str] = None,
                    a_values=(0, 1), budget: int = 20000, majorants: bool = False) -> ProofOutcome:
    """
    在 [ell_lo, ell_hi] 上证明组装后的各项之和不超过 0.22737ℓ + 2log(1+ℓ) - 0.5

    Raises:
        RegimeMismatch: 区间不在所选参数区间内
    """
    if not (math.isfinite(ell_lo) and math.isfinite(ell_hi)) or ell_lo > ell_hi:
        raise LBoundsError(f"ℓ 区间必须有限且非空: [{ell_lo}, {ell_hi}]")
    regime = regime or pick_regime(ell_lo, ell_hi)
    ell_range = Interval(ell_lo, ell_hi)
    cache = _ParamCache(regime)
    outcomes: dict[str, ProofOutcome] = {}

    for name, (margin, strict) in _chain_claims(regime).items():
        fn = _guarded(lambda box, m=margin: m(cache.params(box[0])))
        outcomes[f"链条件 {name}"] = prove_upper_bound(fn, 0, ell_range, budget=budget, strict=strict)

    for a in a_values:
        def main_claim(box: Box, a=a) -> Interval:
            ell, v = box[0], box[1]
            A, K, delta = cache.terms(ell)
            return A + t_part(a, delta, K, v) - theorem_width(ell)

        outcomes[f"组装 a={a}"] = prove_upper_bound(
            _guarded(main_claim), 0, [ell_range, Interval(0.0, V_MAX)], budget=budget)

    if majorants:
        if regime != "large":
            raise RegimeMismatch("有理上界只对 large 区间给出")
        for name, (term, bound) in _large_majorants().items():
            fn = _guarded(lambda box, t=term, b=bound: t(cache.params(box[0])) - b(box[0]))
            outcomes[f"上界 {name}"] = prove_upper_bound(fn, 0, ell_range, budget=budget)

    result = _combine(outcomes, (ell_lo, ell_hi))
    for name, status in result.claims.items():
        if status != "proved":
            logger.warning(f"{name}: {status}")
    logger.info(f"组装复核 ℓ ∈ [{ell_lo}, {ell_hi}] ({regime}): {result.status}，细分 {result.work}")
    return result
