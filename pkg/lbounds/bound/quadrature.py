"""
∫_0^π F_{c,r}(θ) dθ 的直接严格求积

θ 节点把 [0, π] 切成分支确定的区段，节点本身的不确定宽度作为窄条单独包围。
log ζ 部分在区段上单调，凸性可证时用梯形（上）与中点（下）夹逼；
初等部分 G 用 Jet 二阶中点公式。按包围宽度最大优先细分。
"""

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from config import BoundConfig
from tools.exception import DomainError

from ..interval import interval as iv
from ..interval import special as sp
from ..interval.interval import PI, Interval, iv_sum
from ..interval.jet import midpoint_rule
from .jensen import Integrand, theta_nodes
from .params import BoundParams, nearest_int

_LOG2 = iv.log(Interval(2))


@dataclass(frozen=True)
class Segment:
    lo: float
    hi: float
    branch: int
    n: int = 0


def _breakpoints(p: BoundParams) -> list[Interval]:
    nodes = theta_nodes(p)
    merged: list[Interval] = []
    for node in [nodes.one_eta, nodes.minus_eta] + nodes.half:
        if node.hi <= 0.0 or node.lo >= PI.lo:
            continue
        node = Interval(max(node.lo, 0.0), node.hi)
        if merged and merged[-1].hi >= node.lo:
            merged[-1] = merged[-1].hull(node)
        else:
            merged.append(node)
    return merged


def _classify(f: Integrand, lo: float, hi: float) -> Segment:
    """按区段中点处的 σ 判断分支"""
    p = f.p
    sigma = p.c + p.r * sp.cos(Interval(0.5 * lo + 0.5 * hi))
    if sigma.lo >= f.one_eta.hi:
        return Segment(lo, hi, 1)
    if sigma.lo >= (-p.eta).hi and sigma.hi <= f.one_eta.lo:
        return Segment(lo, hi, 2)
    if sigma.hi <= (-p.eta).lo:
        n = nearest_int(sigma.mid)
        if n - 0.5 < sigma.lo and sigma.hi < n + 0.5:
            return Segment(lo, hi, 3, n)
    raise DomainError(f"区段 [{lo}, {hi}] 的分支无法确定，σ = {sigma}")


class JensenQuadrature:

    def __init__(self, p: BoundParams):
        self.f = Integrand(p)
        self.p = p

    def layout(self) -> tuple[list[Segment], list[Interval], Interval]:
        """区段、节点窄条的积分包围、到 π 的尾部包围"""
        segments, slivers = [], []
        start, end_at = 0.0, PI.lo
        for bp in _breakpoints(self.p):
            if bp.hi >= PI.lo:
                end_at = bp.lo
                break
            if bp.lo > start:
                segments.append(_classify(self.f, start, bp.lo))
            slivers.append((Interval(bp.hi) - Interval(bp.lo)) * self.f.F(bp))
            start = bp.hi
        if end_at > start:
            segments.append(_classify(self.f, start, end_at))
        else:
            end_at = start
        w = PI - Interval(end_at)
        w = Interval(max(w.lo, 0.0), max(w.hi, 0.0))
        tail = w * self.f.F(Interval(end_at, max(PI.hi, end_at)))
        return segments, slivers, tail

    def _zeta_cell(self, seg: Segment, a: float, b: float, w: Interval) -> Interval:
        if seg.branch == 2:
            return w * self.f.lz_one_eta
        fa = self.f.zeta_part(seg.branch, Interval(a))
        fb = self.f.zeta_part(seg.branch, Interval(b))
        # 分支1随 θ 递增，分支3递减
        low_end, high_end = (fa, fb) if seg.branch == 1 else (fb, fa)
        lower = (w * low_end).lo
        upper = (w * high_end).hi

        cell = Interval(a, b)
        cos_t, sin2 = sp.cos(cell), iv.pow_int(sp.sin(cell), 2)
        sign = 1 if seg.branch == 1 else -1
        if (sign * cos_t + self.p.r * _LOG2 * sin2).lo > 0:
            upper = min(upper, (w * (fa + fb) / 2).hi)
            lower = max(lower, (w * self.f.zeta_part(seg.branch, Interval(self._mid_toward(a, b, -sign)))).lo)
        return Interval(lower, max(lower, upper))

    @staticmethod
    def _mid_toward(a: float, b: float, direction: int) -> float:
        """浮点中点，保证在精确中点的给定一侧（-1 为不大于，+1 为不小于）"""
        m = 0.5 * a + 0.5 * b
        exact = (Fraction(a) + Fraction(b)) / 2
        if direction < 0 and Fraction(m) > exact:
            m = math.nextafter(m, -math.inf)
        elif direction > 0 and Fraction(m) < exact:
            m = math.nextafter(m, math.inf)
        return m

    def cell(self, seg: Segment, a: float, b: float) -> Interval:
        w = Interval(b) - Interval(a)
        z = self._zeta_cell(seg, a, b, w)
        if seg.branch == 1:
            return z
        g = midpoint_rule(lambda th: self.f.G_of_theta(seg.branch, seg.n, th), Interval(a, b))
        return z + g

    def integrate(self, tol: float = BoundConfig.quad_tol, budget: int = BoundConfig.quad_budget,
                  initial_cells: int = BoundConfig.quad_initial_cells) -> Interval:
        segments, slivers, tail = self.layout()
        fixed = iv_sum(slivers + [tail])
        seq = itertools.count()
        heap, frozen = [], []
        total_width = fixed.width
        for seg in segments:
            count = max(1, round(initial_cells * (seg.hi - seg.lo) / math.pi))
            for piece in Interval(seg.lo, seg.hi).subdivide((seg.hi - seg.lo) / count):
                value = self.cell(seg, piece.lo, piece.hi)
                total_width += value.width
                heapq.heappush(heap, (-value.width, next(seq), seg, piece.lo, piece.hi, value))

        work = len(heap)
        while heap and total_width > tol and work < budget:
            neg_w, _, seg, a, b, value = heapq.heappop(heap)
            m = 0.5 * a + 0.5 * b
            if not a < m < b:
                frozen.append(value)
                continue
            total_width += neg_w
            for lo, hi in ((a, m), (m, b)):
                child = self.cell(seg, lo, hi)
                total_width += child.width
                heapq.heappush(heap, (-child.width, next(seq), seg, lo, hi, child))
                work += 1

        if total_width > tol:
            logger.warning(f"Jensen 求积未达到容差: 宽度 {total_width:.3g}，单元 {work}")
        result = fixed + iv_sum([item[5] for item in sorted(heap, key=lambda x: x[3])] + frozen)
        logger.debug(f"Jensen 求积 {result}，{len(segments)} 个区段，单元 {work}")
        return result


def integrate_jensen(p: BoundParams, tol: float = BoundConfig.quad_tol,
                     budget: int = BoundConfig.quad_budget) -> Interval:
    """∫_0^π F_{c,r} 的包围"""
    return JensenQuadrature(p).integrate(tol=tol, budget=budget)
