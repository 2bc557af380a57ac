"""
N(T,χ) 界的组装

    N ≤ 前两项 + (2/π)·log ζ(σ₁) + (2/π)·arg 界
    |N - 主项| ≤ |g| + (2/π)·log ζ(σ₁) + (2/π)·arg 界
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from loguru import logger

from config import BoundConfig
from tools.exception import PreconditionFailure

from ..interval import interval as iv
from ..interval.interval import PI, Interval
from ..special.gamma import g_of
from ..special.zeta import log_zeta
from .backlund import (BacklundTerms, SBound, S_limit_bound, backlund_preconditions, backlund_terms,
                       jensen_preconditions)
from .jensen import kappas, lemma_preconditions
from .params import BoundParams, first_two_terms, main_term


@dataclass
class BoundReport:
    params: BoundParams
    kappa: Optional[dict]
    S: SBound
    backlund: BacklundTerms
    first_two: Interval
    main: Interval
    g: Interval
    zeta_sigma1_term: Interval
    arg_bound: Interval
    floor_k: Optional[int] = None
    notes: list = field(default_factory=list)

    @property
    def rest(self) -> Interval:
        """(2/π)·log ζ(σ₁) + (2/π)·arg 界"""
        return self.zeta_sigma1_term + 2 / PI * self.arg_bound

    @property
    def total(self) -> Interval:
        """N 的上界"""
        return self.first_two + self.rest

    @property
    def lower(self) -> Interval:
        """N 的下界（下端有效）"""
        return self.first_two - self.rest

    @property
    def deviation(self) -> Interval:
        """|N - 主项| 的上界"""
        return iv.iv_abs(self.g) + self.rest

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "kappa": self.kappa,
            "S": self.S.to_dict(),
            "backlund": self.backlund.to_dict(),
            "first_two": self.first_two.to_pair(),
            "main": self.main.to_pair(),
            "g": self.g.to_pair(),
            "zeta_sigma1_term": self.zeta_sigma1_term.to_pair(),
            "arg_bound": self.arg_bound.to_pair(),
            "total": self.total.to_pair(),
            "lower": self.lower.to_pair(),
            "deviation": self.deviation.to_pair(),
            "floor_k": self.floor_k,
            "notes": list(self.notes),
        }


def rigorous_floor(total: Interval) -> tuple[Optional[int], Optional[str]]:
    """包围整体落在 [k, k+1) 内时返回 k"""
    lo, hi = math.floor(total.lo), math.floor(total.hi)
    if lo == hi:
        return hi, None
    return None, f"上界包围 {total.to_pair()} 跨越整数 {hi}，不给出取整"


def audit(p: BoundParams) -> dict:
    """各组件的参数条件，失败项列表"""
    return {
        "jensen": jensen_preconditions(p),
        "backlund": backlund_preconditions(p),
        "lemma": lemma_preconditions(p),
    }


def assemble_N_bound(p: BoundParams, path: str = "auto", tol: float = BoundConfig.quad_tol,
                     budget: int = BoundConfig.quad_budget) -> BoundReport:
    """
    按参数 p 组装 N(T,χ) 的上界与偏差界

    lemma 路径的条件不满足时自动改用直接求积，只记入 notes；
    Jensen 或 Backlund 的条件不满足时抛出 PreconditionFailure 并附完整审计。
    """
    checks = audit(p)
    failures = checks["jensen"] + checks["backlund"]
    if failures:
        logger.warning(f"参数条件不满足: {failures}")
        raise PreconditionFailure("界的组装条件不满足", failures=failures, audit=checks)
    if p.q is None:
        raise PreconditionFailure("组装 N 的界需要导子 q", failures=["q"], audit=checks)

    S = S_limit_bound(p, path=path, tol=tol, budget=budget)
    terms = backlund_terms(p)
    arg_bound = terms.bound(S.total)
    parity = 1 if p.a == 0 else -1

    notes = []
    kappa = None
    if checks["lemma"]:
        notes.append(f"lemma 路径不可用: {', '.join(checks['lemma'])}")
    elif S.jensen.lemma is not None:
        kappa = kappas(p).to_dict()

    report = BoundReport(
        params=p,
        kappa=kappa,
        S=S,
        backlund=terms,
        first_two=first_two_terms(p.q, p.T, p.a),
        main=main_term(p.q, p.T, parity),
        g=g_of(p.a, p.T),
        zeta_sigma1_term=2 / PI * log_zeta(p.sigma1),
        arg_bound=arg_bound,
        notes=notes,
    )
    report.floor_k, note = rigorous_floor(report.total)
    if note:
        report.notes.append(note)
    logger.info(f"q={p.q}, T={p.T.to_pair()}, a={p.a}: N ≤ {report.total.hi:.7f}"
                f"（Jensen {S.jensen.path}），取整 {report.floor_k}")
    return report
