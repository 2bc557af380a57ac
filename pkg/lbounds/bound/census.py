"""
本原特征计数与低处零点总数的上界，导子表条目的二分搜索
"""

from functools import lru_cache
from typing import NamedTuple

from loguru import logger
from sympy import factorint

from tools.exception import DomainError, PreconditionFailure

from .assembly import assemble_N_bound
from .params import select_params
from .theorem import theorem_bound


class Census(NamedTuple):
    even: int
    odd: int

    @property
    def total(self) -> int:
        return self.even + self.odd


def _prime_power_census(p: int, e: int) -> Census:
    if p == 2:
        if e == 1:
            return Census(0, 0)
        if e == 2:
            return Census(0, 1)
        half = 2 ** (e - 3)
        return Census(half, half)
    if e == 1:
        return Census((p - 1) // 2 - 1, (p - 1) // 2)
    half = p ** (e - 2) * (p - 1) ** 2 // 2
    return Census(half, half)


@lru_cache(maxsize=None)
def primitive_census(q: int) -> Census:
    """
    导子为 q 的本原特征个数，按 χ(-1) = +1 / -1 分开

    对素数幂可乘，奇偶性按乘积合并。
    """
    if q < 1:
        raise DomainError(f"导子必须为正: {q}")
    even, odd = 1, 0
    for p, e in factorint(q).items():
        pe, po = _prime_power_census(p, e)
        even, odd = even * pe + odd * po, even * po + odd * pe
    return Census(even, odd)


def zero_budget(Q: int, T=1) -> int:
    """
    定理允许的低处零点总数: Σ_{2<q≤Q} (#偶·⌊上界_偶⌋ + #奇·⌊上界_奇⌋)
    """
    total = 0
    for q in range(3, Q + 1):
        census = primitive_census(q)
        if census.total == 0:
            continue
        for a, count in ((0, census.even), (1, census.odd)):
            if count == 0:
                continue
            bound = theorem_bound(q, T, a)
            if bound.n_zero:
                continue
            total += count * bound.max_zeros
    logger.debug(f"Q={Q}, T={T}: 零点总数上界 {total}")
    return total


def table_entry(T, a: int, k: int, path: str = "auto", q_start: int = 3,
                q_cap: int = 10 ** 9) -> int:
    """
    用参数表组装的界仍保证 N(T,χ) ≤ k 的最大导子 q

    上界关于 q 单调，先倍增找到上端，再二分。
    """
    def holds(q: int) -> bool:
        p = select_params(q, T, a, regime="table", k=k)
        return assemble_N_bound(p, path=path).total.hi < k + 1

    lo = q_start
    if not holds(lo):
        raise PreconditionFailure(f"q={lo} 时界已超过 {k}", failures=[f"N ≤ {k}"])
    hi = lo * 2
    while holds(hi):
        lo, hi = hi, hi * 2
        if hi > q_cap:
            raise DomainError(f"q 超过上限 {q_cap}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    logger.info(f"T={T}, a={a}, k={k}: 最大导子 {lo}")
    return lo
