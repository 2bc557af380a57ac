"""
Hurwitz ζ(s, x) 的严格包围

Euler–Maclaurin，w = N + x:
    ζ(s,x) = Σ_{n<N} (n+x)^{-s} + w^{1-s}/(s-1) + w^{-s}/2
             + Σ_{k=1}^{m} B_{2k}/(2k)! · (s)_{2k-1} · w^{-s-2k+1} + R
    |R| ≤ |B_{2m}|/(2m)! · |(s)_{2m}| · w^{-σ-2m+1}/(σ+2m-1)
对 σ > 1-2m 成立。
"""

import math

from tools.exception import DomainError, PoleProximity

from ..interval import interval as iv
from ..interval.cinterval import ComplexInterval, real_power
from ..interval.interval import Interval
from ..special.zeta import bernoulli_factorial

EM_TERMS = 10


def _check_pole(s: ComplexInterval):
    if s.re.contains(1.0) and s.im.contains(0.0):
        raise PoleProximity(f"s 的包围触及极点 s=1: {s}")


def em_terms_for(s: ComplexInterval) -> tuple[int, int]:
    """(N, m)：N 取到 |s| + 2m 以上，m 保证 σ+2m-1 > 0"""
    m = max(EM_TERMS, math.ceil((1 - s.re.lo) / 2) + 2)
    N = math.ceil(s.abs().hi) + 2 * m + 5
    return N, m


def hurwitz_zeta(s, x, N: int | None = None, m: int | None = None) -> ComplexInterval:
    s = ComplexInterval.coerce(s)
    x = Interval.coerce(x)
    if x.lo <= 0 or x.hi > 1:
        raise DomainError(f"hurwitz_zeta 需要 x ∈ (0,1]: {x}")
    _check_pole(s)
    N0, m0 = em_terms_for(s)
    N, m = N or N0, m or m0
    if (s.re + 2 * m - 1).lo <= 0:
        raise DomainError(f"Euler–Maclaurin 阶数 m={m} 对 σ={s.re} 不够")

    minus_s = -s
    total = ComplexInterval(0.0)
    for n in range(N):
        total = total + real_power(x + n, minus_s)

    w = x + N
    w_pow = real_power(w, minus_s)  # w^{-s}
    total = total + real_power(w, 1 - s) / (s - 1) + w_pow / 2

    rising = s
    inv_w2 = 1 / iv.pow_int(w, 2)
    scale = 1 / w
    for k in range(1, m + 1):
        total = total + rising * w_pow * (bernoulli_factorial(k) * scale)
        rising = rising * (s + (2 * k - 1)) * (s + 2 * k)
        scale = scale * inv_w2

    rising_2m = rising / (s + 2 * m)
    radius = (iv.iv_abs(bernoulli_factorial(m)) * rising_2m.abs()
              * iv.pow_real(w, -s.re - 2 * m + 1) / (s.re + 2 * m - 1)).hi
    err = Interval(-radius, radius)
    return ComplexInterval(total.re + err, total.im + err)
