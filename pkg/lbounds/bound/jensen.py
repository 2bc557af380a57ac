"""
Jensen 积分: 被积函数 F_{c,r}(θ)、κ 系数与 ∫_0^π F 的上界

两条路径:
    lemma:  κ1·ℓ + (θ_{-η}-θ_{1+η})·log ζ(1+η) + 两段 log ζ 积分的梯形上界
             + (κ4+κ5+Σκ6)/(T+2)
    direct: 对 F 做严格的自适应求积（见 quadrature.py）
取两者中较小的有效上界。
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from loguru import logger

from config import BoundConfig, IntervalConfig
from tools.exception import PreconditionFailure

from ..interval import interval as iv
from ..interval import special as sp
from ..interval.interval import HALF_PI, PI, Interval, iv_sum
from ..interval.jet import jcos, jlog, jsin, jsquare, midpoint_rule
from ..special.zeta import log_zeta
from .params import BoundParams, nearest_int, theta_at

_LOG2 = iv.log(Interval(2))


# ---- 被积函数 ----

class Integrand:
    """固定参数下的 F_{c,r}；分支上的初等部分 G 可用区间或Jet求值"""

    def __init__(self, p: BoundParams):
        self.p = p
        self.one_eta = 1 + p.eta
        self.log_T2_sq = 2 * iv.log(p.T + 2)
        self.lz_one_eta = log_zeta(self.one_eta)

    def L(self, j: int, sigma, t):
        """L_j = log(((j+σ)² + t²)/(T+2)²)，t = r|sin θ| + T"""
        return jlog(jsquare(sigma + j) + jsquare(t)) - self.log_T2_sq

    def G2(self, sigma, t):
        """分支2的初等部分: (1+η-σ)·(ℓ/2 + L_1/4)"""
        p = self.p
        return (self.one_eta - sigma) * (p.ell / 2 + self.L(1, sigma, t) / 4)

    def G3(self, sigma, t, n: int):
        """分支3 ([σ] = n ≤ 0) 的初等部分"""
        p = self.p
        value = (1 - 2 * sigma) * (p.ell / 2) + (1 - 2 * sigma + 2 * n) * (self.L(1 - n, sigma, t) / 4)
        for k in range(1, -n + 1):
            value = value + self.L(k - 1, sigma, t) / 2
        return value

    def G_of_theta(self, branch: int, n: int, theta):
        """θ ∈ [0, π] 上的 G，theta 可以是 Jet"""
        p = self.p
        sigma = p.c + p.r * jcos(theta)
        t = p.r * jsin(theta) + p.T
        if branch == 2:
            return self.G2(sigma, t)
        if branch == 3:
            return self.G3(sigma, t, n)
        return Interval(0.0)

    def zeta_part(self, branch: int, theta) -> Interval:
        """log ζ 部分在 θ 处的包围"""
        p = self.p
        cos_t = sp.cos(Interval.coerce(theta))
        if branch == 1:
            sigma = p.c + p.r * cos_t
            return log_zeta(Interval(max(sigma.lo, self.one_eta.lo), max(sigma.hi, self.one_eta.lo)))
        if branch == 2:
            return self.lz_one_eta
        return log_zeta(Interval(max((1 - p.c - p.r * cos_t).lo, self.one_eta.lo),
                                 max((1 - p.c - p.r * cos_t).hi, self.one_eta.lo)))

    def F(self, theta) -> Interval:
        """F_{c,r}(θ)，θ ∈ [-π, π]，跨越分支时取各分支的凸包"""
        p = self.p
        th = iv.iv_abs(Interval.coerce(theta))
        cos_t, sin_t = sp.cos(th), sp.sin(th)
        sigma = p.c + p.r * cos_t
        t = p.r * iv.iv_abs(sin_t) + p.T
        eta = p.eta
        pieces = []
        if sigma.hi >= self.one_eta.lo:
            s1 = Interval(max(sigma.lo, self.one_eta.lo), max(sigma.hi, self.one_eta.lo))
            pieces.append(log_zeta(s1))
        lo2, hi2 = max(sigma.lo, -eta.hi), min(sigma.hi, self.one_eta.hi)
        if lo2 <= hi2:
            pieces.append(self.lz_one_eta + self.G2(Interval(lo2, hi2), t))
        if sigma.lo < -eta.lo:
            top = min(sigma.hi, -eta.lo)
            for n in range(nearest_int(sigma.lo), nearest_int(top) + 1):
                lo3, hi3 = max(sigma.lo, n - 0.5), min(top, n + 0.5)
                if lo3 > hi3:
                    continue
                s3 = Interval(lo3, hi3)
                pieces.append(log_zeta(1 - s3) + self.G3(s3, t, n))
        return Interval.hull_of(pieces)


def F_theta(theta, p: BoundParams) -> Interval:
    return Integrand(p).F(theta)


# ---- θ 节点 ----

@dataclass
class ThetaNodes:
    one_eta: Interval
    minus_eta: Interval
    one_minus_c: Interval
    half: list  # θ_{-j-1/2}, j = 0, 1, ...

    def to_dict(self) -> dict:
        return {
            "theta_1+eta": self.one_eta.to_pair(),
            "theta_-eta": self.minus_eta.to_pair(),
            "theta_1-c": self.one_minus_c.to_pair(),
            "theta_half": [x.to_pair() for x in self.half],
        }


def theta_nodes(p: BoundParams) -> ThetaNodes:
    c_for_one_minus = (1 - p.c_exact) if p.c_exact is not None else 1 - p.c
    half = []
    j = 0
    while True:
        node = theta_at(p, -j - 0.5)
        half.append(node)
        if node.lo >= PI.lo:
            break
        j += 1
    return ThetaNodes(
        one_eta=theta_at(p, 1 + p.eta),
        minus_eta=theta_at(p, -p.eta),
        one_minus_c=theta_at(p, c_for_one_minus),
        half=half,
    )


# ---- κ 系数 ----

@dataclass
class Kappas:
    k1: Interval
    k2: Interval
    k3: Interval
    k4: Interval
    k5: Interval
    k6: list = field(default_factory=list)

    @property
    def k6_sum(self) -> Interval:
        return iv_sum(self.k6)

    @property
    def small_terms(self) -> Interval:
        """κ4 + κ5 + Σκ6"""
        return self.k4 + self.k5 + self.k6_sum

    def to_dict(self) -> dict:
        return {
            "kappa1": self.k1.to_pair(), "kappa2": self.k2.to_pair(), "kappa3": self.k3.to_pair(),
            "kappa4": self.k4.to_pair(), "kappa5": self.k5.to_pair(),
            "kappa6": [x.to_pair() for x in self.k6],
        }


class TrigPoly:
    """a0 + a1·cos + a2·sin + a3·cos² + a4·sin·cos"""

    def __init__(self, a0=0, a1=0, a2=0, a3=0, a4=0):
        self.coef = [Interval.coerce(x) for x in (a0, a1, a2, a3, a4)]

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        return TrigPoly(*(x + y for x, y in zip(self.coef, other.coef)))

    def scale(self, k) -> "TrigPoly":
        return TrigPoly(*(x * k for x in self.coef))

    def __call__(self, theta):
        a0, a1, a2, a3, a4 = self.coef
        c, s = jcos(theta), jsin(theta)
        return a0 + a1 * c + a2 * s + a3 * jsquare(c) + a4 * (s * c)

    def antiderivative(self, theta: Interval) -> Interval:
        a0, a1, a2, a3, a4 = self.coef
        s, c = sp.sin(theta), sp.cos(theta)
        return (a0 * theta + a1 * s - a2 * c + a3 * (theta / 2 + s * c / 2)
                + a4 * iv.pow_int(s, 2) / 2)

    def integrate(self, alpha: Interval, beta: Interval) -> Interval:
        return self.antiderivative(beta) - self.antiderivative(alpha)


def l_star(p: BoundParams, j: int) -> TrigPoly:
    """L⋆_j = 2r·sinθ - 4 + (7/19)·((j+c+r cosθ)² + (r sinθ - 2)²)，展开为三角多项式"""
    c, r = p.c, p.r
    B = -4 + 7 * (iv.pow_int(j + c, 2) + iv.pow_int(r, 2) + 4) / 19
    C = 14 * (j + c) * r / 19
    D = 10 * r / 19
    return TrigPoly(B, C, D)


def _times_linear(u0, u1, poly: TrigPoly) -> TrigPoly:
    """(u0 + u1·cos)·(B + C·cos + D·sin)"""
    B, C, D = poly.coef[0], poly.coef[1], poly.coef[2]
    u0, u1 = Interval.coerce(u0), Interval.coerce(u1)
    return TrigPoly(u0 * B, u0 * C + u1 * B, u0 * D, u1 * C, u1 * D)


def _kappa_integrands(p: BoundParams, nodes: ThetaNodes) -> list[tuple[TrigPoly, Interval, Interval]]:
    """[(被积三角多项式, 下限, 上限)]，依次对应 κ4, κ5, κ6_1, κ6_2, ..."""
    out = [
        (_times_linear(1 + p.eta - p.c, -p.r, l_star(p, 1)).scale(0.25), nodes.one_eta, nodes.minus_eta),
        (_times_linear(1 - 2 * p.c, -2 * p.r, l_star(p, 1)).scale(0.25), nodes.minus_eta, nodes.half[0]),
    ]
    j_stop = math.ceil((p.r - p.c + 0.5).hi)
    for j in range(1, j_stop):
        if j >= len(nodes.half):
            break
        poly = _times_linear(1 - 2 * p.c - 2 * j, -2 * p.r, l_star(p, j + 1))
        for k in range(1, j + 1):
            poly = poly + l_star(p, k - 1).scale(2)
        out.append((poly.scale(0.25), nodes.half[j - 1], nodes.half[j]))
    return out


def kappas(p: BoundParams, method: str = "exact", quad_cells: int = 256) -> Kappas:
    """
    κ1..κ6 的包围

    method='exact' 用三角多项式的原函数，'quadrature' 用二阶中点公式（交叉检验用）。
    """
    nodes = theta_nodes(p)
    t_one, t_minus = nodes.one_eta, nodes.minus_eta
    k1 = ((t_minus - t_one) * (1 + p.eta - p.c) / 2 - (PI - t_minus) * (p.c - 0.5)
          + p.r * (sp.sin(t_minus) + sp.sin(t_one)) / 2)

    J1 = p.J1
    total = log_zeta(p.c + p.r)
    for j in range(1, J1):
        total = total + 2 * log_zeta(p.c + p.r * sp.cos(PI * j / (2 * J1)))
    k2 = PI / (4 * J1) * total

    J2 = p.J2
    t_c = nodes.one_minus_c
    total = log_zeta(1 - p.c + p.r)
    for j in range(1, J2):
        angle = PI * j / J2 + (1 - j / Interval(J2)) * t_c
        total = total + 2 * log_zeta(1 - p.c - p.r * sp.cos(angle))
    k3 = (PI - t_c) / (2 * J2) * total

    integrals = []
    for poly, alpha, beta in _kappa_integrands(p, nodes):
        if method == "exact":
            integrals.append(poly.integrate(alpha, beta))
        elif method == "quadrature":
            integrals.append(_quadrature(poly, alpha, beta, quad_cells))
        else:
            raise ValueError(f"未知的 κ 求值方法: {method}")
    return Kappas(k1, k2, k3, integrals[0], integrals[1], integrals[2:])


def _quadrature(poly: TrigPoly, alpha: Interval, beta: Interval, cells: int) -> Interval:
    if beta.hi <= alpha.lo:
        return Interval(0.0)
    inner = Interval(alpha.hi, max(alpha.hi, beta.lo))
    total = Interval(0.0)
    if inner.width > 0:
        for piece in inner.subdivide(inner.width / cells):
            total = total + midpoint_rule(poly, piece)
    # 端点不确定的窄条
    for sliver in (Interval(alpha.lo, alpha.hi), Interval(beta.lo, beta.hi)):
        total = total + Interval(-1, 1) * sliver.width * iv.iv_abs(poly(sliver)).hi
    return total


# ---- lemma 路径 ----

def lemma_preconditions(p: BoundParams, nodes: Optional[ThetaNodes] = None) -> list[str]:
    nodes = nodes or theta_nodes(p)
    failures = []
    if not (1 + p.eta).certainly_le(p.c):
        failures.append("1+η ≤ c")
    if not p.c.certainly_lt(p.r - p.eta):
        failures.append("c < r-η")
    if not nodes.one_eta.hi <= 2.1:
        failures.append("θ_{1+η} ≤ 2.1")
    if not p.r.certainly_gt(2 * p.c - 1):
        failures.append("r > 2c-1")
    if iv.below(p.T, IntervalConfig.t_min):
        failures.append("T ≥ 5/7")
    return failures


@dataclass
class LemmaTerms:
    ell_term: Interval
    constant_term: Interval
    right_half: Interval
    left_half: Interval
    small_terms: Interval
    kappas: Kappas

    @property
    def total(self) -> Interval:
        return self.ell_term + self.constant_term + self.right_half + self.left_half + self.small_terms


def lemma_terms(p: BoundParams) -> LemmaTerms:
    nodes = theta_nodes(p)
    failures = lemma_preconditions(p, nodes)
    if failures:
        raise PreconditionFailure("Jensen 积分的 lemma 路径条件不满足", failures=failures)
    k = kappas(p)
    lz_eta = log_zeta(1 + p.eta)
    lz_c = log_zeta(p.c)
    right = ((lz_eta + lz_c) / 2 * (nodes.one_eta - HALF_PI)
             + PI / (4 * p.J1) * lz_c + k.k2)
    left = ((lz_eta + lz_c) / 2 * (nodes.one_minus_c - nodes.minus_eta)
            + (PI - nodes.one_minus_c) / (2 * p.J2) * lz_c + k.k3)
    return LemmaTerms(
        ell_term=k.k1 * p.ell,
        constant_term=(nodes.minus_eta - nodes.one_eta) * lz_eta,
        right_half=right,
        left_half=left,
        small_terms=k.small_terms / (p.T + 2),
        kappas=k,
    )


# ---- 总入口 ----

@dataclass
class JensenResult:
    """bound.hi 是 ∫_0^π F 的严格上界"""
    bound: Interval
    path: str
    lemma: Optional[Interval] = None
    direct: Optional[Interval] = None
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "bound": self.bound.to_pair(),
            "path": self.path,
            "lemma": self.lemma.to_pair() if self.lemma else None,
            "direct": self.direct.to_pair() if self.direct else None,
            "failures": self.failures,
        }


def jensen_integral(p: BoundParams, path: str = "auto", tol: float = BoundConfig.quad_tol,
                    budget: int = BoundConfig.quad_budget) -> JensenResult:
    """
    ∫_0^π F_{c,r}(θ) dθ 的上界

    path='auto' 两条路径都算，取上端较小者；lemma 条件不满足时只用 direct。
    """
    from .quadrature import integrate_jensen

    lemma_value, direct_value, failures = None, None, []
    if path in ("auto", "lemma"):
        try:
            lemma_value = lemma_terms(p).total
        except PreconditionFailure as e:
            failures = e.failures
            if path == "lemma":
                raise
            logger.debug(f"lemma 路径不可用: {failures}")
    if path in ("auto", "direct"):
        direct_value = integrate_jensen(p, tol=tol, budget=budget)

    candidates = [(v, name) for v, name in ((lemma_value, "lemma"), (direct_value, "direct")) if v is not None]
    if not candidates:
        raise PreconditionFailure("没有可用的 Jensen 积分路径", failures=failures)
    best, name = min(candidates, key=lambda item: item[0].hi)
    return JensenResult(best, name, lemma_value, direct_value, failures)
