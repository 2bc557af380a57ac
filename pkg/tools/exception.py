"""
包含统一的异常处理逻辑，便于集中管理

每个异常带有退出码，命令分发器据此生成机器可读的错误记录
"""

from typing import Any


class LBoundsError(Exception):
    """所有计算异常的基类"""
    exit_code: int = 1

    def to_record(self) -> dict[str, Any]:
        """转换为可写入JSON的错误记录"""
        return {
            "error": type(self).__name__,
            "message": str(self),
            "exit_code": self.exit_code,
        }


class DomainError(LBoundsError, ValueError):
    """区间参数超出函数定义域，调用者需要切分或拒绝该区间"""
    exit_code = 2


class PoleProximity(DomainError):
    """s 的包围区间触及 s=1 的极点"""


class RegimeMismatch(LBoundsError):
    """ℓ 不在所选参数区间内"""
    exit_code = 2


class NotPrimitive(LBoundsError):
    """需要本原特征"""
    exit_code = 2


class PreconditionFailure(LBoundsError):
    """参数链条件不满足，failures 列出每条失败的不等式"""
    exit_code = 2

    def __init__(self, message: str, failures: list[str] | None = None, audit: dict | None = None):
        super().__init__(message)
        self.failures = failures or []
        self.audit = audit or {}

    def to_record(self) -> dict[str, Any]:
        record = super().to_record()
        record["failures"] = self.failures
        return record


class BudgetExceeded(LBoundsError):
    """工作量超出预算，best 保存目前为止最好的包围区间"""
    exit_code = 3

    def __init__(self, message: str, best: Any = None, work: int = 0):
        super().__init__(message)
        self.best = best
        self.work = work

    def to_record(self) -> dict[str, Any]:
        record = super().to_record()
        record["work"] = self.work
        if self.best is not None:
            record["best"] = [self.best.lo, self.best.hi] if hasattr(self.best, "lo") else repr(self.best)
        return record


class NudgeNeeded(LBoundsError):
    """高度T太靠近零点，需要微调T"""
    exit_code = 2


class CompletenessFailure(LBoundsError):
    """变号计数与辐角原理计数不一致"""
    exit_code = 3

    def __init__(self, message: str, candidates: list | None = None):
        super().__init__(message)
        self.candidates = candidates or []

    def to_record(self) -> dict[str, Any]:
        record = super().to_record()
        record["candidates"] = self.candidates
        return record


class SchemaMismatch(LBoundsError):
    """数据集版本不匹配"""
    exit_code = 2


class UnsortedInput(LBoundsError):
    """写入的记录没有按 (q, label, ordinate_lo) 排序"""
    exit_code = 2
