"""
低处零点扫描

在网格上求 Hardy Z 的严格符号，变号区间二分到宽度 ≤ tol，
再与辐角原理计数比对。实特征只扫 t > 0，复特征每对共轭只扫一个，
扫 [-t_max, t_max]。
"""

import math
from dataclasses import dataclass
from typing import Optional

from loguru import logger

from config import ScanConfig
from tools.exception import CompletenessFailure

from ..characters.character import DirichletCharacter
from ..interval.interval import TWO_PI, Interval
from .counting import CountResult, arg_principal_count
from .hardy import hardy_Z, sign_of
from .lvalue import require_primitive

METHOD = "Z-sign-change"


@dataclass(frozen=True)
class ZeroRecord:
    character_label: str
    q: int
    parity: int
    ordinate_lo: float
    ordinate_hi: float
    method: str = METHOD
    tol: float = ScanConfig.tol

    @property
    def ordinate(self) -> Interval:
        return Interval(self.ordinate_lo, self.ordinate_hi)

    @property
    def isolation_width(self) -> float:
        return self.ordinate_hi - self.ordinate_lo

    @property
    def sign_of_gamma(self) -> str:
        return "+" if self.ordinate_lo >= 0 else "-"

    @property
    def label_index(self) -> int:
        return int(self.character_label.split(".")[1])

    def sort_key(self) -> tuple:
        return (self.q, self.label_index, self.ordinate_lo)

    def to_record(self) -> dict:
        return {
            "character_label": self.character_label,
            "q": self.q,
            "parity": self.parity,
            "ordinate_lo": self.ordinate_lo,
            "ordinate_hi": self.ordinate_hi,
            "method": self.method,
            "tol": self.tol,
        }

    @classmethod
    def from_record(cls, record: dict) -> "ZeroRecord":
        return cls(record["character_label"], int(record["q"]), int(record["parity"]),
                   float(record["ordinate_lo"]), float(record["ordinate_hi"]),
                   record["method"], float(record["tol"]))


def t_for_ell(q: int, ell: float) -> float:
    """ℓ = log(q(T+2)/2π) 时的 T，可能 ≤ 0"""
    return (TWO_PI * math.exp(ell) / q).lo - 2


class _SignProbe:
    """缓存网格点上的 Z 符号，符号无法判定时在附近挪动"""

    def __init__(self, chi: DirichletCharacter):
        self.chi = chi
        self.cache: dict[float, int] = {}
        self.calls = 0

    def sign(self, t: float) -> int:
        if t not in self.cache:
            self.calls += 1
            self.cache[t] = sign_of(hardy_Z(Interval(t), self.chi))
        return self.cache[t]

    def settled(self, t: float, spread: float) -> tuple[float, int]:
        """t 处或其附近（±spread 内）符号确定的点"""
        s = self.sign(t)
        k = 1
        while s == 0 and k <= 8:
            for cand in (t + spread * k / 16, t - spread * k / 16):
                s = self.sign(cand)
                if s != 0:
                    return cand, s
            k += 1
        return t, s


def _refine(probe: _SignProbe, lo: float, hi: float, s_lo: int, tol: float) -> tuple[float, float]:
    """二分到宽度 ≤ tol；做不到时抛出 CompletenessFailure"""
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        s = probe.sign(mid)
        if s == 0:
            # Z 在 mid 处的包围含0，在 (lo, hi) 内换点
            step = (hi - lo) / 16
            for k in range(1, 8):
                for cand in (mid - step * k, mid + step * k):
                    s = probe.sign(cand)
                    if s != 0:
                        mid = cand
                        break
                if s != 0:
                    break
            else:
                break
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    if hi - lo > tol:
        raise CompletenessFailure(f"{probe.chi.label}: 变号区间 [{lo}, {hi}] 无法细化到 {tol}",
                                  candidates=[[lo, hi]])
    return lo, hi


def _sign_changes(probe: _SignProbe, t_lo: float, t_hi: float, step: float,
                  tol: float) -> tuple[list[tuple[float, float]], list[list[float]]]:
    n = max(1, math.ceil((t_hi - t_lo) / step))
    grid = [t_lo + (t_hi - t_lo) * i / n for i in range(n + 1)]
    spread = (t_hi - t_lo) / n
    points = [probe.settled(t, spread) for t in grid]
    intervals, unsettled = [], []
    prev_t, prev_s = points[0]
    for t, s in points[1:]:
        if s == 0:
            unsettled.append([t - spread, t + spread])
            continue
        if prev_s != 0 and s != prev_s:
            intervals.append(_refine(probe, prev_t, t, prev_s, tol))
        prev_t, prev_s = t, s
    return intervals, unsettled


def _expected(count: CountResult, real: bool) -> int:
    # 实特征的零点关于0对称，只存 γ > 0 的一半
    return count.N // 2 if real else count.N


def scan_zeros(chi: DirichletCharacter, t_max: float, tol: float = ScanConfig.tol,
               grid_step: float = ScanConfig.grid_step,
               refine_rounds: int = ScanConfig.refine_rounds,
               count: Optional[CountResult] = None) -> list[ZeroRecord]:
    """
    |γ| ≤ t_max 的全部零点，并用辐角原理计数认证完整性

    Raises:
        CompletenessFailure: 加密网格后变号个数仍与计数不符
    """
    require_primitive(chi)
    count = count or arg_principal_count(t_max, chi)
    height = count.T
    real = chi.is_real
    if real and count.N % 2:
        raise CompletenessFailure(f"{chi.label}: 实特征的零点数 {count.N} 为奇数，t=0 处可能有零点",
                                  candidates=[[0.0, 0.0]])
    expected = _expected(count, real)
    t_lo = 0.0 if real else -height

    probe = _SignProbe(chi)
    step = grid_step
    intervals: list = []
    unsettled: list = []
    for round_no in range(refine_rounds + 1):
        if expected == 0:
            intervals = []
            break
        intervals, unsettled = _sign_changes(probe, t_lo, height, step, tol)
        if len(intervals) == expected:
            break
        logger.debug(f"{chi.label}: 第 {round_no} 轮变号 {len(intervals)} 个，计数 {expected}，加密网格")
        step /= 2
    else:
        raise CompletenessFailure(
            f"{chi.label}: 变号 {len(intervals)} 个，辐角原理计数 {expected} 个（t ≤ {height}）",
            candidates=unsettled)

    records = [ZeroRecord(chi.label, chi.modulus, chi.parity, lo, hi, METHOD, tol)
               for lo, hi in intervals]
    records.sort(key=ZeroRecord.sort_key)
    logger.debug(f"{chi.label}: {len(records)} 个零点，Z 求值 {probe.calls} 次")
    return records


def count_from_records(records: list[ZeroRecord], T: float, real: bool) -> int:
    """由记录得到 N(T,χ)，实特征计入对称的一半"""
    inside = 0
    for rec in records:
        lo, hi = rec.ordinate_lo, rec.ordinate_hi
        if lo <= T < hi or lo < -T <= hi:
            raise CompletenessFailure(f"{rec.character_label}: 零点 {rec.ordinate} 跨越高度 {T}",
                                      candidates=[[rec.ordinate_lo, rec.ordinate_hi]])
        if -T <= lo and hi <= T:
            inside += 1
    return 2 * inside if real else inside
