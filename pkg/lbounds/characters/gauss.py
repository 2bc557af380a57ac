"""
Gauss 和与根数

τ(χ) = Σ_a χ(a)·e(a/q)，ε(χ) = τ(χ)/(i^a·√q)，本原特征的 |ε| = 1
"""

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from loguru import logger

from tools.exception import NotPrimitive

from ..interval import interval as iv
from ..interval.cinterval import ComplexInterval, unit_root
from .character import DirichletCharacter


class GaussRoot(NamedTuple):
    gauss_sum: ComplexInterval
    epsilon: ComplexInterval


def gauss_sum(chi: DirichletCharacter) -> ComplexInterval:
    q = chi.modulus
    total = ComplexInterval(0.0)
    # χ(a)e(a/q) = e(turns(a) + a/q)，圈数精确相加
    for a, t in chi.value_table.items():
        total = total + unit_root(t + Fraction(a, q))
    return total


@lru_cache(maxsize=4096)
def gauss_root(chi: DirichletCharacter) -> GaussRoot:
    if chi.modulus < 2 or chi.conductor != chi.modulus:
        raise NotPrimitive(f"Gauss 和的根数只对本原特征定义: {chi.label}，导子 {chi.conductor}")
    tau = gauss_sum(chi)
    denom = iv.sqrt(chi.modulus)
    eps = tau / denom
    if chi.parity == 1:
        # 除以 i
        eps = ComplexInterval(eps.im, -eps.re)
    if not eps.abs2().contains(1.0):
        logger.warning(f"{chi.label}: |ε|² 的包围 {eps.abs2()} 不含1")
    return GaussRoot(tau, eps)
