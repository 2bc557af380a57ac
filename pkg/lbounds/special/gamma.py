"""
log Γ 的严格包围，以及计数公式中的 Γ 项 g(a,T) 与差分上界 E(a,d,T)

Stirling 公式在 w = z + K 处求值，再用 lnΓ(z) = lnΓ(z+K) - Σ_{j<K} log(z+j) 回推:
    lnΓ(w) = (w-1/2)log w - w + log(2π)/2 + 1/(12w) + R,
    |R| ≤ (4+3π)/(1440|w|³)
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from config import IntervalConfig
from tools.exception import DomainError

from ..interval import interval as iv
from ..interval import special as sp
from ..interval.interval import E, HALF_PI, PI, TWO_PI, Interval, iv_sum
from ..interval.prover import ProofOutcome, prove_upper_bound

_STIRLING_C = (4 + 3 * PI) / 1440
# (8+6π)/45
_TAIL_C = (8 + 6 * PI) / 45
_HALF_LOG_2PI = iv.log(TWO_PI) / 2


@dataclass
class StirlingEnclosure:
    """主项 main 与余项半径 radius，value = main ± radius"""
    main: Interval
    radius: float

    @property
    def value(self) -> Interval:
        return self.main + Interval(-self.radius, self.radius)


def _arg_upper(x: Interval, y: Interval) -> Interval:
    """arg(x+iy)，要求 y > 0 或 x > 0"""
    if x.lo > 0:
        return sp.atan(y / x)
    if y.lo > 0:
        return HALF_PI - sp.atan(x / y)
    raise DomainError(f"arg 需要 x > 0 或 y > 0: x={x}, y={y}")


def _log_abs(x: Interval, y: Interval) -> Interval:
    """log|x+iy|，x > 0"""
    return iv.log(x) + sp.log1p(iv.pow_int(y / x, 2)) / 2


def _check_shift(x: Interval, shift: int):
    if (x + shift).lo <= 0:
        raise DomainError(f"平移 {shift} 不足以使 Re(z+K) > 0: x={x}")


def stirling_im(x, y, shift: int = 2) -> StirlingEnclosure:
    """
    Im lnΓ(x+iy) 的包围

    x + shift > 0；y 可取任意实数（奇函数），当 x+j ≤ 0 时要求 y > 0。
    """
    x, y = Interval.coerce(x), Interval.coerce(y)
    _check_shift(x, shift)
    X = x + shift
    mod2 = iv.pow_int(X, 2) + iv.pow_int(y, 2)

    main = ((X - 0.5) * sp.atan(y / X) + y * _log_abs(X, y) - y
            - y / (12 * mod2))
    for j in range(shift):
        main = main - _arg_upper(x + j, y)
    radius = (_STIRLING_C / (mod2 * iv.sqrt(mod2))).hi
    return StirlingEnclosure(main, radius)


def stirling_re(x, y, shift: int = 2) -> StirlingEnclosure:
    """Re lnΓ(x+iy) 的包围，约定同 stirling_im"""
    x, y = Interval.coerce(x), Interval.coerce(y)
    _check_shift(x, shift)
    X = x + shift
    mod2 = iv.pow_int(X, 2) + iv.pow_int(y, 2)

    main = ((X - 0.5) * _log_abs(X, y) - y * sp.atan(y / X) - X + _HALF_LOG_2PI
            + X / (12 * mod2))
    for j in range(shift):
        xj = x + j
        if xj.lo > 0:
            main = main - _log_abs(xj, y)
        else:
            main = main - iv.log(iv.pow_int(xj, 2) + iv.pow_int(y, 2)) / 2
    radius = (_STIRLING_C / (mod2 * iv.sqrt(mod2))).hi
    return StirlingEnclosure(main, radius)


def _lemma_form(x: Interval, y: Interval) -> Interval:
    # 平移2的显式形式，逐项与 y·log(y/e) + π(x-1/2)/2 - ... 对应
    x2 = x + 2
    main = (y * iv.log(y / E) + HALF_PI * (x - 0.5) - (x + 1.5) * sp.atan(x2 / y)
            - y / (12 * (iv.pow_int(x2, 2) + iv.pow_int(y, 2)))
            + y / 2 * sp.log1p(iv.pow_int(x2 / y, 2))
            + sp.atan(x / y) + sp.atan((x + 1) / y))
    return main


def im_lngamma(x, y, shift: int = 2, form: str = "stable") -> Interval:
    """
    Im lnΓ(x+iy)，x ≥ 0, y > 0

    form='stable' 用 atan(y/X) 与 log1p 的稳定写法（任意平移），
    form='lemma' 按平移2的显式公式逐项求值。两者数学上相同。
    """
    x, y = Interval.coerce(x), Interval.coerce(y)
    if x.lo < 0 or y.lo <= 0:
        raise DomainError(f"im_lngamma 需要 x ≥ 0, y > 0: x={x}, y={y}")
    if form == "lemma":
        enclosure = stirling_im(x, y, 2)
        return _lemma_form(x, y) + Interval(-enclosure.radius, enclosure.radius)
    if form != "stable":
        raise DomainError(f"未知的求值形式: {form}")
    return stirling_im(x, y, shift).value


def lngamma(x, y, shift: int = 16) -> tuple[Interval, Interval]:
    """
    lnΓ(x+iy) 的 (实部, 虚部)，沿上半平面连续的分支

    y < 0 时取共轭；y 跨过0时要求 x+shift 足够大且 x > 0。
    """
    x, y = Interval.coerce(x), Interval.coerce(y)
    shift = max(shift, math.ceil(2 - x.lo))
    if y.lo < 0 and y.hi <= 0:
        re, im = lngamma(x, -y, shift)
        return re, -im
    if y.lo < 0 < y.hi and x.lo <= 0:
        raise DomainError("y 跨过0时需要 x > 0")
    re = stirling_re(x, y, shift).value
    im = stirling_im(x, y, shift).value
    return re, im


# ---- g(a,T) ----

def _as_T(T) -> Interval:
    T = Interval.coerce(T)
    if iv.below(T, IntervalConfig.t_min):
        raise DomainError(f"需要 T ≥ 5/7: {T}")
    if not T.is_finite():
        raise DomainError("T 必须有限，T → ∞ 用 g_tail_scaled")
    return T


def _split_T(T: Interval, fn) -> Interval:
    if T.width <= IntervalConfig.split_width:
        return fn(T)
    return Interval.hull_of(fn(piece) for piece in T.subdivide(IntervalConfig.split_width))


def _g_cancelled(a: int, T: Interval) -> Interval:
    T2 = 2 * T
    D = 81 + 40 * a + 4 * iv.pow_int(T, 2)
    main = (-(4 * T / (3 * PI)) / D
            + T / TWO_PI * sp.log1p((40 * a + 81) / (4 * iv.pow_int(T, 2)))
            + 2 / PI * (sp.atan((2 * a + 1) / T2) + sp.atan((2 * a + 5) / T2)
                        - (Fraction(a, 2) + Fraction(7, 4)) * sp.atan((2 * a + 9) / T2)))
    radius = (2 / PI * _TAIL_C / (D * iv.sqrt(D))).hi
    return main + Interval(-radius, radius)


def _g_direct(a: int, T: Interval, shift: int) -> Interval:
    im = stirling_im(Fraction(1, 4) + Fraction(a, 2), T / 2, shift).value
    return 2 / PI * im - T / PI * iv.log(T / (2 * E)) - Fraction(2 * a - 1, 4)


def g_of(a: int, T, form: str = "cancelled", shift: int = 2) -> Interval:
    """
    g(a,T) = (2/π)·Im lnΓ(1/4 + a/2 + iT/2) - (T/π)·log(T/(2e)) - (2a-1)/4

    form='cancelled' 用消去主项后的 atan/log1p 形式，'direct' 直接用 Stirling。
    """
    if a not in (0, 1):
        raise DomainError(f"a 只能是 0 或 1: {a}")
    T = _as_T(T)
    if form == "cancelled":
        return _split_T(T, lambda piece: _g_cancelled(a, piece))
    if form == "direct":
        return _split_T(T, lambda piece: _g_direct(a, piece, shift))
    raise DomainError(f"未知的求值形式: {form}")


def g_tail_scaled(a: int, u) -> Interval:
    """
    T·g(a,T) 在 u = 1/T ∈ [0, u0] 上的包围

    atan(y)/y ∈ [1-y²/3, 1-y²/3+y⁴/5]，log1p(x)/x ∈ [1-x/2, 1-x/2+x²/3]，
    要求 x, y ≤ 1。u → 0 时极限为 1/(24π)。
    """
    u = Interval.coerce(u)
    if u.lo < 0:
        raise DomainError(f"u 需要非负: {u}")
    k = 40 * a + 81
    u2 = iv.pow_int(u, 2)
    x = k * u2 / 4
    if x.hi > 1 or ((2 * a + 9) * u / 2).hi > 1:
        raise DomainError(f"u 太大，尾部展开失效: {u}")

    def atan_ratio(y: Interval) -> Interval:
        y2 = iv.pow_int(y, 2)
        return Interval((1 - y2 / 3).lo, (1 - y2 / 3 + iv.pow_int(y2, 2) / 5).hi)

    log_ratio = Interval((1 - x / 2).lo, (1 - x / 2 + iv.pow_int(x, 2) / 3).hi)
    denom = k * u2 + 4

    main = (-(4 / (3 * PI)) / denom
            + Interval(k) / (8 * PI) * log_ratio
            + 2 / PI * (Fraction(2 * a + 1, 2) * atan_ratio((2 * a + 1) * u / 2)
                        + Fraction(2 * a + 5, 2) * atan_ratio((2 * a + 5) * u / 2)
                        - (Fraction(a, 2) + Fraction(7, 4)) * Fraction(2 * a + 9, 2)
                        * atan_ratio((2 * a + 9) * u / 2)))
    radius = (2 / PI * _TAIL_C * u2 / (denom * iv.sqrt(denom))).hi
    return main + Interval(-radius, radius)


# ---- E(a,d,T) ----

def _E_difference(a: int, d: Interval, T: Interval) -> Interval:
    p = 2 * a + 17
    h = 2 * d
    T2 = iv.pow_int(T, 2)
    h2 = iv.pow_int(h, 2)
    A = p * p + 4 * T2
    A_plus = iv.pow_int(p + h, 2) + 4 * T2
    A_minus = iv.pow_int(p - h, 2) + 4 * T2

    err = _TAIL_C * (1 / (A_plus * iv.sqrt(A_plus)) + 1 / (A_minus * iv.sqrt(A_minus))
                     + 2 / (A * iv.sqrt(A)))
    g1 = 2 * T / 3 * (2 * h2 * (3 * p * p - 4 * T2 - h2)) / (A * A_plus * A_minus)
    g2 = -(T / 4) * sp.log1p((2 * h2 * (4 * T2 - p * p) + iv.pow_int(h2, 2)) / iv.pow_int(A, 2))
    g3 = Interval(0.0)
    for b in (1, 5, 9, 13):
        pb = 2 * a + b
        Ab = pb * pb + 4 * T2
        if (Ab - pb * h).lo > 0:
            g3 = g3 + sp.atan(4 * T * pb * h2 / (iv.pow_int(Ab, 2) + h2 * (4 * T2 - pb * pb)))
        else:
            # pb-h 为负且 T 较小时合并公式差一个 π，退回逐项形式
            g3 = g3 + (2 * sp.atan(pb / (2 * T)) - sp.atan((pb + h) / (2 * T))
                       - sp.atan((pb - h) / (2 * T)))
    g4 = (-Fraction(p - 2, 4) * sp.atan(4 * T * p * h2 / (iv.pow_int(A, 2) + h2 * (4 * T2 - p * p)))
          + h / 4 * sp.atan(4 * T * h / (A - h2)))
    return g1 + g2 + g3 + g4 + err


def _E_direct(a: int, d: Interval, T: Interval) -> Interval:
    h = 2 * d
    T2 = 2 * T
    terms = []
    for b in (1, 5, 9, 13):
        pb = 2 * a + b
        terms.append(2 * sp.atan(pb / T2) - sp.atan((pb + h) / T2) - sp.atan((pb - h) / T2))
    p = 2 * a + 17
    sq = iv.pow_int(T2, 2)

    def log_part(v):
        return sp.log1p(iv.pow_int(v, 2) / sq)

    def frac_part(v):
        return 2 * T / (3 * (iv.pow_int(v, 2) + sq))

    main = (iv_sum(terms)
            + frac_part(p + h) + frac_part(p - h) - 2 * frac_part(Interval(p))
            + (p + h - 2) / 4 * sp.atan((p + h) / T2)
            + (p - h - 2) / 4 * sp.atan((p - h) / T2)
            - Fraction(p - 2, 2) * sp.atan(p / T2)
            + T / 2 * log_part(Interval(p)) - T / 4 * log_part(p + h) - T / 4 * log_part(p - h))
    A = p * p + 4 * iv.pow_int(T, 2)
    A_plus = iv.pow_int(p + h, 2) + 4 * iv.pow_int(T, 2)
    A_minus = iv.pow_int(p - h, 2) + 4 * iv.pow_int(T, 2)
    err = _TAIL_C * (1 / (A_plus * iv.sqrt(A_plus)) + 1 / (A_minus * iv.sqrt(A_minus))
                     + 2 / (A * iv.sqrt(A)))
    return main + err


def E_of(a: int, d, T, form: str = "difference") -> Interval:
    """
    |Im lnΓ 的二阶差分| 的上界 E(a,d,T)，0 ≤ d < 9/2, T ≥ 5/7

    form='difference' 把成对的 atan/log 合并成单个 atan/log1p，消除抵消；
    form='direct' 按定义逐项求值。
    """
    if a not in (0, 1):
        raise DomainError(f"a 只能是 0 或 1: {a}")
    d = Interval.coerce(d)
    if d.lo < 0 or d.hi >= 4.5:
        raise DomainError(f"E 需要 0 ≤ d < 9/2: {d}")
    T = _as_T(T)
    evaluate = {"difference": _E_difference, "direct": _E_direct}.get(form)
    if evaluate is None:
        raise DomainError(f"未知的求值形式: {form}")
    pieces = []
    for d_piece in (d.subdivide(IntervalConfig.split_width) if d.width > IntervalConfig.split_width else [d]):
        pieces.append(_split_T(T, lambda t_piece: evaluate(a, d_piece, t_piece)))
    return Interval.hull_of(pieces)


def exact_E(a: int, d, T, shift: int = 16) -> Interval:
    """
    𝓔(a,d,T) = |Im lnΓ((1/2+d+a+iT)/2) - 2·Im lnΓ((1/2+a+iT)/2) + Im lnΓ((1/2-d+a+iT)/2)|
    """
    d = Interval.coerce(d)
    T = Interval.coerce(T)
    base = Fraction(1, 4) + Fraction(a, 2)
    y = T / 2
    plus = stirling_im(base + d / 2, y, shift).value
    mid = stirling_im(Interval.from_fraction(base), y, shift).value
    minus = stirling_im(base - d / 2, y, shift).value
    return iv.iv_abs(plus - 2 * mid + minus)


# ---- 验证 ----

def verify_gamma_bound(a: int, T_max: float = IntervalConfig.t_max,
                       budget: int = 200000) -> ProofOutcome:
    """
    证明 |g(a,T)| ≤ (2-a)/(50T) 对所有 T ≥ 5/7 成立

    有限段 [5/7, T_max] 用分支定界，[T_max, ∞) 用 u = 1/T 的尾部展开。
    """
    t_min = IntervalConfig.t_min
    finite = prove_upper_bound(
        lambda box: iv.iv_abs(g_of(a, box[0])) * box[0],
        Fraction(2 - a, 50),
        Interval(t_min, T_max),
        budget=budget,
    )
    if not finite.proved:
        logger.warning(f"|g| 界在有限段未证明: a={a}, 状态 {finite.status}")
        return finite
    tail = prove_upper_bound(
        lambda box: iv.iv_abs(g_tail_scaled(a, box[0])),
        Fraction(2 - a, 50),
        Interval(0.0, (1 / Interval(T_max)).hi),
        budget=budget,
    )
    status = "proved" if tail.proved else tail.status
    outcome = ProofOutcome(status, finite.certificate + tail.certificate,
                           finite.work + tail.work, witness=tail.witness,
                           covered=(t_min, "inf"))
    outcome.claims = {"finite": finite.status, "tail": tail.status}
    logger.info(f"|g(a={a},T)| ≤ (2-a)/(50T): {status}，细分 {outcome.work}")
    return outcome


def verify_E_positive(a: int, d_range=(0.0, 4.4),
                      T_range=(IntervalConfig.t_min, IntervalConfig.t_max),
                      budget: int = 200000) -> ProofOutcome:
    """证明 E(a,d,T) > 0"""
    box = [_as_pair(d_range), _as_pair(T_range)]
    return prove_upper_bound(lambda b: Interval(0.0), lambda b: E_of(a, b[0], b[1]),
                             box, budget=budget, strict=True)


def E_linear_majorant(a: int, d, T) -> Interval:
    """((640+216a)d - 112 - 39a)/(1536(3T+3a-1)) + 2^{-10}"""
    d, T = Interval.coerce(d), Interval.coerce(T)
    return (((640 + 216 * a) * d - 112 - 39 * a) / (1536 * (3 * T + 3 * a - 1))
            + Fraction(1, 1024))


def verify_E_linear_majorant(a: int, T_max: float = IntervalConfig.t_max, d_range=(0.25, 0.625),
                             budget: int = 500000) -> ProofOutcome:
    """证明 E(a,d,T)/π ≤ 线性上界，d ∈ [1/4, 5/8], T ∈ [5/7, T_max]"""
    box = [_as_pair(d_range), _as_pair((IntervalConfig.t_min, T_max))]
    return prove_upper_bound(lambda b: E_of(a, b[0], b[1]) / PI,
                             lambda b: E_linear_majorant(a, b[0], b[1]),
                             box, budget=budget)


# large 区间 (ℓ ≥ 27.02) 内 δ = 2c-σ₁-1/2 的范围
LARGE_DELTA = (0.26, 0.395)


def gE_combined_majorant(T) -> Interval:
    """1/(14(T-1/5)) + 2^{-10}"""
    T = Interval.coerce(T)
    return 1 / (14 * (T - Fraction(1, 5))) + Fraction(1, 1024)


def verify_gE_combined(a: int, d_range=LARGE_DELTA, T_max: float = IntervalConfig.t_max,
                       budget: int = 500000) -> ProofOutcome:
    """证明 |g(a,T)| + E(a,d,T)/π ≤ 1/(14(T-1/5)) + 2^{-10}"""
    box = [_as_pair(d_range), _as_pair((IntervalConfig.t_min, T_max))]
    return prove_upper_bound(lambda b: iv.iv_abs(g_of(a, b[1])) + E_of(a, b[0], b[1]) / PI,
                             lambda b: gE_combined_majorant(b[1]),
                             box, budget=budget)


def _as_pair(bounds) -> Interval:
    lo, hi = bounds
    return Interval(Interval.coerce(lo).lo, Interval.coerce(hi).hi)
