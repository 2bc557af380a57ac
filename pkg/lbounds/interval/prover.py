"""
分支定界: 值域包围与不等式证明

enclose_range 用 Moore–Skelboe 方法分别求下确界与上确界，
prove_upper_bound 按最差余量优先细分，证明 f ≤ g 并输出可复查的叶子证书。
"""

import heapq
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from loguru import logger

from tools.exception import BudgetExceeded, DomainError

from .interval import Box, Interval

Evaluator = Callable[[Box], Interval]


@dataclass
class ProofOutcome:
    """
    证明结果

    status: 'proved' / 'disproved' / 'inconclusive'
    certificate: (Box, f-g 包围) 叶子列表，全部 hi ≤ 0 时即为证书
    """
    status: str
    certificate: list = field(default_factory=list)
    work: int = 0
    witness: Optional[Box] = None
    covered: Optional[tuple] = None
    claims: dict = field(default_factory=dict)

    @property
    def proved(self) -> bool:
        return self.status == "proved"

    def to_records(self) -> list[dict]:
        return [
            {"box": box.to_record(), "margin": margin.to_pair()}
            for box, margin in self.certificate
        ]

    def summary(self) -> dict:
        record = {"status": self.status, "leaves": len(self.certificate), "work": self.work}
        if self.witness is not None:
            record["witness"] = self.witness.to_record()
        if self.covered is not None:
            record["covered"] = [str(x) for x in self.covered]
        if self.claims:
            record["claims"] = dict(self.claims)
        return record


def _as_box(domain) -> Box:
    if isinstance(domain, Box):
        return domain
    if isinstance(domain, Interval):
        return Box([domain])
    return Box(domain)


def _safe_eval(f: Evaluator, box: Box) -> Interval:
    # 在盒子上越出定义域时视为无信息，由细分解决
    try:
        return f(box)
    except DomainError:
        return Interval(-math.inf, math.inf)


def _bound_max(f: Evaluator, root: Box, tol: float, budget: int, counter: list) -> Interval:
    """返回 [incumbent, upper]，max f 落在其中"""
    seq = itertools.count()
    incumbent = -math.inf
    heap: list = []

    def push(box: Box):
        y = _safe_eval(f, box)
        counter[0] += 1
        heapq.heappush(heap, (-y.hi, next(seq), box))

    def probe(box: Box):
        nonlocal incumbent
        try:
            incumbent = max(incumbent, f(box.midpoint()).lo)
        except DomainError:
            pass

    push(root)
    probe(root)
    while True:
        neg_upper, _, box = heap[0]
        upper = -neg_upper
        if upper - incumbent <= tol:
            return Interval(min(incumbent, upper), upper)
        if counter[0] >= budget:
            best = Interval(min(incumbent, upper), upper)
            raise BudgetExceeded(f"值域包围超出预算 {budget}", best=best, work=counter[0])
        heapq.heappop(heap)
        if not box.can_split():
            if math.isinf(upper):
                raise DomainError(f"函数在不可再分的盒子上无定义: {box}")
            # 已到浮点分辨率，保留为终端盒子
            heapq.heappush(heap, (neg_upper, next(seq), box))
            return Interval(min(incumbent, upper), upper)
        for child in box.split():
            push(child)
            probe(child)


def enclose_range(f: Evaluator, D, tol: float, budget: int = 10 ** 6,
                  tail: Optional[tuple[float, Interval]] = None) -> Interval:
    """
    给出 f 在 D 上值域的包围 [m, M]，两端各自不超过 tol 的过估计

    Args:
        f: 盒子到区间的包围函数
        D: 定义域（区间、盒子或区间序列）
        tol: 单侧容差
        budget: 求值次数上限
        tail: 一维半无穷域 (cutoff, 尾部包围)，在 [cutoff, ∞) 上由调用方给出单调尾界

    Raises:
        BudgetExceeded: best 携带目前最好的包围
    """
    box = _as_box(D)
    tail_enclosure = None
    if tail is not None:
        cutoff, tail_enclosure = tail
        first = box[0]
        if first.hi != math.inf or not first.lo <= cutoff:
            raise DomainError("tail 只适用于上端无界的一维区间")
        box = Box([Interval(first.lo, cutoff)] + list(box.dims[1:]))
    if not all(d.is_finite() for d in box):
        raise DomainError("无界定义域需要提供 tail 或换元")

    counter = [0]
    try:
        upper = _bound_max(f, box, tol, budget, counter)
    except BudgetExceeded as e:
        best = Interval(_safe_eval(f, box).lo, e.best.hi)
        raise BudgetExceeded(str(e), best=best, work=counter[0]) from None
    neg = lambda b: -f(b)
    try:
        lower = _bound_max(neg, box, tol, budget + counter[0], counter)
    except BudgetExceeded as e:
        best = Interval(-e.best.hi, upper.hi)
        raise BudgetExceeded(str(e), best=best, work=counter[0]) from None
    result = Interval(-lower.hi, upper.hi)
    if tail_enclosure is not None:
        result = result.hull(tail_enclosure)
    logger.debug(f"值域包围 {result}，求值 {counter[0]} 次")
    return result


def prove_upper_bound(f: Evaluator, g, D, budget: int = 10 ** 6,
                      strict: bool = False) -> ProofOutcome:
    """
    证明对所有 x ∈ D 有 f(x) ≤ g(x)（strict=True 时为严格不等）

    g 可以是求值函数或常数。叶子在 (f-g).hi ≤ 0 时判定成立；
    若某盒子中点处 f.lo > g.hi，则给出反例盒子。
    """
    root = _as_box(D)
    g_eval: Evaluator = g if callable(g) else (lambda _b, c=Interval.coerce(g): c)

    def margin(box: Box) -> Interval:
        try:
            return f(box) - g_eval(box)
        except DomainError:
            return Interval(-math.inf, math.inf)

    def settled(m: Interval) -> bool:
        return m.hi < 0 if strict else m.hi <= 0

    seq = itertools.count()
    work = 1
    heap = [(-root_margin.hi, next(seq), root, root_margin)
            for root_margin in [margin(root)]]
    while heap:
        neg_worst, _, box, m = heap[0]
        if settled(m):
            # 最差叶子已成立，其余皆成立
            leaves = sorted(((b, mm) for _, _, b, mm in heap), key=lambda item: item[0].sort_key())
            return ProofOutcome("proved", leaves, work, covered=tuple(root.to_record()))
        heapq.heappop(heap)
        mid = box.midpoint()
        try:
            fm, gm = f(mid), g_eval(mid)
            work += 1
            if fm.lo > gm.hi or (strict and fm.lo >= gm.hi):
                logger.info(f"发现反例: {mid}")
                return ProofOutcome("disproved", [], work, witness=mid)
        except DomainError:
            pass
        if work >= budget or not box.can_split():
            heapq.heappush(heap, (neg_worst, next(seq), box, m))
            leaves = sorted(((b, mm) for _, _, b, mm in heap), key=lambda item: item[0].sort_key())
            logger.warning(f"证明未完成，细分 {work} 次，最差余量 {m.hi}")
            return ProofOutcome("inconclusive", leaves, work)
        for child in box.split():
            cm = margin(child)
            work += 1
            heapq.heappush(heap, (-cm.hi, next(seq), child, cm))
    return ProofOutcome("proved", [], work)
