"""
实轴上 ζ(σ), σ > 1 的严格包围

Euler–Maclaurin 求和:
    ζ(σ) = Σ_{n<N} n^{-σ} + N^{1-σ}/(σ-1) + N^{-σ}/2
           + Σ_{k=1}^{m} B_{2k}/(2k)! · (σ)_{2k-1} · N^{-σ-2k+1} + R
    |R| ≤ |B_{2m}|/(2m)! · (σ)_{2m} · N^{-σ-2m+1}/(σ+2m-1)
"""

import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from tools.exception import DomainError

from ..interval import interval as iv
from ..interval.interval import Interval

CORRECTION_TERMS = 5


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """第n个Bernoulli数（精确有理数）"""
    p, q = mpmath.bernfrac(n)
    return Fraction(int(p), int(q))


@lru_cache(maxsize=None)
def bernoulli_factorial(k: int) -> Interval:
    """B_{2k}/(2k)! 的包围"""
    return Interval.from_fraction(bernoulli(2 * k) / math.factorial(2 * k))


@lru_cache(maxsize=4096)
def log_int(n: int) -> Interval:
    return iv.log(Interval(n))


def _terms_needed(sigma: float) -> int:
    return max(20, math.ceil(10 / (sigma - 1)))


@lru_cache(maxsize=65536)
def _zeta_point(sigma: float) -> Interval:
    s = Interval(sigma)
    N = _terms_needed(sigma)
    m = CORRECTION_TERMS

    total = Interval(1.0)
    for n in range(2, N):
        total = total + iv.exp(-s * log_int(n))

    logN = log_int(N)
    n_pow = iv.exp(-s * logN)  # N^{-σ}
    total = total + Interval(N) * n_pow / (s - 1) + n_pow / 2

    # (σ)_{2k-1}·N^{-σ-2k+1}
    rising = s
    power = n_pow / N
    inv_n2 = Interval(1.0) / Interval(N * N)
    for k in range(1, m + 1):
        total = total + bernoulli_factorial(k) * rising * power
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
        power = power * inv_n2

    # rising 此时为 (σ)_{2m+1}，余项用 (σ)_{2m} = (σ)_{2m+1}/(σ+2m)
    rising_2m = rising / (s + 2 * m)
    radius = (iv.iv_abs(bernoulli_factorial(m)) * rising_2m * n_pow
              * iv.pow_int(Interval(N), 1 - 2 * m) / (s + 2 * m - 1)).hi
    return total + Interval(-radius, radius)


def zeta_real(sigma) -> Interval:
    """
    ζ(σ) 的包围，σ > 1

    区间参数利用 ζ 在 (1, ∞) 上严格递减，只在端点求值。
    """
    sigma = Interval.coerce(sigma)
    if sigma.lo <= 1:
        raise DomainError(f"zeta_real 需要 σ > 1: {sigma}")
    if sigma.is_point():
        return _zeta_point(sigma.lo)
    upper = _zeta_point(sigma.lo)
    lower = Interval(1.0) if math.isinf(sigma.hi) else _zeta_point(sigma.hi)
    return Interval(max(lower.lo, 1.0), upper.hi)


def log_zeta(sigma) -> Interval:
    """log ζ(σ)，σ > 1"""
    return iv.log(zeta_real(sigma))
