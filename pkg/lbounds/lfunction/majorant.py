"""
|L(s,χ)| 的分段上界（χ 本原，q > 1）

    σ ≥ 1+η:        ζ(σ)
    -η ≤ σ ≤ 1+η:   ζ(1+η)·(q|s+1|/2π)^{(1+η-σ)/2}
    -1/2 ≤ σ ≤ -η:  ζ(1-σ)·(q|s+1|/2π)^{1/2-σ}
    σ < -1/2:       ζ(1-σ)·(q/2π)^{1/2-σ}·|s-[σ]+1|^{1/2-σ+[σ]}·Π_{j=1}^{-[σ]} |s+j-1|
[σ] 为最近整数，恰在中点时取靠近0的一侧；在 [-1/2, 0) 上最后一式与第三式相同。
"""

from fractions import Fraction

from tools.exception import DomainError

from ..bound.params import nearest_int
from ..interval import interval as iv
from ..interval.cinterval import ComplexInterval
from ..interval.interval import TWO_PI, Interval
from ..special.zeta import zeta_real


def l_upper_bound(s, q: int, eta) -> float:
    s = ComplexInterval.coerce(s)
    eta = Interval.coerce(eta)
    if q < 2:
        raise DomainError(f"需要 q > 1: {q}")
    if eta.lo <= 0 or eta.hi > 0.5:
        raise DomainError(f"η 必须在 (0, 1/2] 内: {eta}")
    sigma = s.re
    if not sigma.is_point():
        raise DomainError(f"l_upper_bound 需要点 s: {s}")

    if sigma.certainly_ge(1 + eta):
        return zeta_real(sigma).hi
    scale = q * (s + 1).abs() / TWO_PI
    if sigma.certainly_ge(-eta):
        return (zeta_real(1 + eta) * iv.pow_real(scale, (1 + eta - sigma) / 2)).hi
    if sigma.certainly_ge(-0.5):
        return (zeta_real(1 - sigma) * iv.pow_real(scale, 0.5 - sigma)).hi

    n = nearest_int(Fraction(sigma.lo))
    bound = zeta_real(1 - sigma) * iv.pow_real(q / TWO_PI, 0.5 - sigma)
    bound = bound * iv.pow_real((s + (1 - n)).abs(), 0.5 - sigma + n)
    for j in range(1, -n + 1):
        bound = bound * (s + (j - 1)).abs()
    return bound.hi
