"""
界的参数: ℓ、主项、η、(c, r)、σ₁、δ 以及 θ_σ
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from loguru import logger

from config import BoundConfig
from tools.exception import DomainError, RegimeMismatch

from ..interval import interval as iv
from ..interval import special as sp
from ..interval.interval import E, PI, SQRT2, TWO_PI, Interval
from ..special.gamma import im_lngamma

Exact = Fraction | int | float


@dataclass
class BoundParams:
    """一次界计算的全部参数，区间量均为严格包围"""
    T: Interval
    a: int
    ell: Interval
    eta: Interval
    c: Interval
    r: Interval
    sigma1: Interval
    delta: Interval
    mode: str
    regime: str
    q: Optional[int] = None
    k: Optional[int] = None
    J1: int = BoundConfig.J1
    J2: int = BoundConfig.J2
    # 表格参数的精确值，便于 θ_σ 在端点精确取 0 或 π
    c_exact: Optional[Fraction] = None
    r_exact: Optional[Fraction] = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        record = {
            "q": self.q, "a": self.a, "k": self.k, "mode": self.mode, "regime": self.regime,
            "J1": self.J1, "J2": self.J2,
        }
        for name in ("T", "ell", "eta", "c", "r", "sigma1", "delta"):
            record[name] = getattr(self, name).to_pair()
        if self.c_exact is not None:
            record["c_exact"] = str(self.c_exact)
            record["r_exact"] = str(self.r_exact)
        return record


def compute_ell(q: int, T) -> Interval:
    """ℓ = log(q(T+2)/(2π))"""
    return iv.log(q * (Interval.coerce(T) + 2) / TWO_PI)


def main_term(q: int, T, parity: int) -> Interval:
    """(T/π)·log(qT/(2πe)) - χ(-1)/4，parity = χ(-1) ∈ {+1, -1}"""
    if parity not in (1, -1):
        raise DomainError(f"parity 只能是 ±1: {parity}")
    T = Interval.coerce(T)
    return T / PI * iv.log(q * T / (TWO_PI * E)) - Fraction(parity, 4)


def first_two_terms(q: int, T, a: int, shift: int = 16) -> Interval:
    """(T/π)·log(q/π) + (2/π)·Im lnΓ(1/4 + a/2 + iT/2)"""
    T = Interval.coerce(T)
    im = im_lngamma(Fraction(1, 4) + Fraction(a, 2), T / 2, shift=shift)
    return T / PI * iv.log(q / PI) + 2 / PI * im


def default_eta(ell: Interval) -> Interval:
    """η = 18/(10+9ℓ)，截断到 ≤ 1/2"""
    eta = 18 / (10 + 9 * ell)
    return Interval(min(eta.lo, 0.5), min(eta.hi, 0.5))


def theta_sigma(sigma, c, r) -> Interval:
    """
    θ_σ: σ ≥ c+r 时为 0，σ ≤ c-r 时为 π，否则 arccos((σ-c)/r)

    三个参数都是精确数时按有理数判断端点。
    """
    exact = _exact_ratio(sigma, c, r)
    if exact is not None:
        if exact >= 1:
            return Interval(0.0)
        if exact <= -1:
            return PI
        return sp.arccos(Interval.from_fraction(exact))
    x = (Interval.coerce(sigma) - c) / r
    if x.lo >= 1:
        return Interval(0.0)
    if x.hi <= -1:
        return PI
    clipped = Interval(max(x.lo, -1.0), min(x.hi, 1.0))
    return sp.arccos(clipped)


def _exact_ratio(sigma, c, r) -> Optional[Fraction]:
    values = []
    for v in (sigma, c, r):
        if isinstance(v, Interval):
            if not v.is_point():
                return None
            v = v.lo
        if isinstance(v, (int, float, Fraction)):
            values.append(Fraction(v))
        else:
            return None
    s, cc, rr = values
    return (s - cc) / rr


def sigma1_for(mode: str, c: Interval, r: Interval) -> Interval:
    if mode == "simple":
        return c + iv.pow_int(c - 0.5, 2) / r
    if mode == "inelegant":
        return 0.5 + SQRT2 * (c - 0.5)
    raise DomainError(f"未知的 Backlund 模式: {mode}")


def params_from_ell(ell, regime: str, T=1, a: int = 0, q: Optional[int] = None,
                    eta=None, mode: Optional[str] = None) -> BoundParams:
    """
    按 ℓ 的包围构造 large / middle 区间的参数

    large:  c = 1 + 391/(74ℓ+683), r = 149/140 + 769/(30ℓ+512)
    middle: c = 1 + 505/(111ℓ+430), r = 149/140 + 747/(36ℓ+283)
    """
    ell = Interval.coerce(ell)
    if regime == "large":
        if ell.lo < BoundConfig.large_ell:
            raise RegimeMismatch(f"large 区间需要 ℓ ≥ {BoundConfig.large_ell}: {ell}")
        c = 1 + 391 / (74 * ell + 683)
        r = Fraction(149, 140) + 769 / (30 * ell + 512)
    elif regime == "middle":
        lo, hi = BoundConfig.middle_ell
        if ell.lo < lo or ell.hi > hi:
            raise RegimeMismatch(f"middle 区间需要 {lo} ≤ ℓ ≤ {hi}: {ell}")
        c = 1 + 505 / (111 * ell + 430)
        r = Fraction(149, 140) + 747 / (36 * ell + 283)
    else:
        raise RegimeMismatch(f"params_from_ell 只支持 large / middle: {regime}")
    mode = mode or "simple"
    eta = default_eta(ell) if eta is None else Interval.coerce(eta)
    sigma1 = sigma1_for(mode, c, r)
    delta = 2 * c - sigma1 - 0.5
    return BoundParams(T=Interval.coerce(T), a=a, ell=ell, eta=eta, c=c, r=r,
                       sigma1=sigma1, delta=delta, mode=mode, regime=regime, q=q)


def table_column(T, a: int) -> Optional[dict]:
    """参数表中高度包含 T 的那一列；T 可以是 Fraction、浮点数或区间"""
    T = Interval.coerce(T)
    for (T_key, a_key), column in BoundConfig.table2.items():
        if a_key == a and Interval.from_fraction(T_key).contains(T):
            return column
    return None


def select_params(q: int, T, a: int, regime: str = "auto", k: Optional[int] = None,
                  c: Optional[Exact] = None, r: Optional[Exact] = None, eta=None,
                  mode: Optional[str] = None, J1: int = BoundConfig.J1,
                  J2: int = BoundConfig.J2) -> BoundParams:
    """
    为 (q, T, a) 选择参数

    regime: 'auto' / 'large' / 'middle' / 'table' / 'custom'
    'table' 按 (T, a, k) 查参数表，c = c*/2^11, r = r*/2^11，Backlund 取 inelegant 模式；
    'custom' 使用给定的 c, r。
    """
    if q < 2:
        raise DomainError(f"导子必须大于1: {q}")
    if a not in (0, 1):
        raise DomainError(f"a 只能是 0 或 1: {a}")
    T_iv = Interval.coerce(T)
    ell = compute_ell(q, T_iv)

    if regime == "auto":
        if ell.lo >= BoundConfig.large_ell:
            regime = "large"
        elif BoundConfig.middle_ell[0] <= ell.lo and ell.hi <= BoundConfig.middle_ell[1]:
            regime = "middle"
        else:
            raise RegimeMismatch(f"ℓ = {ell} 不在 large / middle 区间，请用 table 或 custom")

    if regime in ("large", "middle"):
        p = params_from_ell(ell, regime, T=T_iv, a=a, q=q, eta=eta, mode=mode)
        p.J1, p.J2 = J1, J2
        return p

    if regime == "table":
        column = table_column(T_iv, a)
        if column is None or k not in column:
            raise RegimeMismatch(f"参数表没有 (T={T}, a={a}, k={k}) 的参数")
        c_star, r_star = column[k]
        c_exact, r_exact = Fraction(c_star, 2048), Fraction(r_star, 2048)
        mode = mode or "inelegant"
    elif regime == "custom":
        if c is None or r is None:
            raise DomainError("custom 需要给出 c 和 r")
        c_exact, r_exact = Fraction(c), Fraction(r)
        mode = mode or "simple"
    else:
        raise RegimeMismatch(f"未知的参数区间: {regime}")

    c_iv, r_iv = Interval.from_fraction(c_exact), Interval.from_fraction(r_exact)
    eta_iv = default_eta(ell) if eta is None else Interval.coerce(eta)
    sigma1 = sigma1_for(mode, c_iv, r_iv)
    delta = 2 * c_iv - sigma1 - 0.5
    p = BoundParams(T=T_iv, a=a, ell=ell, eta=eta_iv, c=c_iv, r=r_iv, sigma1=sigma1,
                    delta=delta, mode=mode, regime=regime, q=q, k=k, J1=J1, J2=J2,
                    c_exact=c_exact, r_exact=r_exact)
    logger.debug(f"参数: q={q}, T={T}, a={a}, {regime}/{mode}, c={c_exact}, r={r_exact}")
    return p


def nearest_int(x: Exact) -> int:
    """四舍五入到最近整数，恰为半整数时取靠近0的一侧"""
    x = Fraction(x)
    f = math.floor(x)
    d = x - f
    if d < Fraction(1, 2):
        return f
    if d > Fraction(1, 2):
        return f + 1
    return f if f >= 0 else f + 1


def theta_at(p: BoundParams, sigma) -> Interval:
    """θ_σ，尽量使用参数的精确值"""
    c = p.c_exact if p.c_exact is not None else p.c
    r = p.r_exact if p.r_exact is not None else p.r
    return theta_sigma(sigma, c, r)
