"""
外向舍入的区间算术

端点为双精度浮点数（允许 ±inf）。加减乘除与开方借助 math.fma 的无误差变换
得到定向舍入结果；超越函数在libm结果上向外推 2 ulp。
"""

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from tools.exception import DomainError

INF = math.inf
_MAX = 1.7976931348623157e308
_TINY = 2.0 ** -960

Number = Union[int, float, Fraction]


def _down(x: float) -> float:
    return math.nextafter(x, -INF)


def _up(x: float) -> float:
    return math.nextafter(x, INF)


def down2(x: float) -> float:
    """libm 结果向下推 2 ulp"""
    if x == -INF:
        return x
    return _down(_down(x))


def up2(x: float) -> float:
    """libm 结果向上推 2 ulp"""
    if x == INF:
        return x
    return _up(_up(x))


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def add_down(a: float, b: float) -> float:
    s, e = _two_sum(a, b)
    if math.isinf(s):
        if math.isinf(a) or math.isinf(b):
            return s
        return s if s < 0 else _MAX
    return _down(s) if e < 0 else s


def add_up(a: float, b: float) -> float:
    s, e = _two_sum(a, b)
    if math.isinf(s):
        if math.isinf(a) or math.isinf(b):
            return s
        return s if s > 0 else -_MAX
    return _up(s) if e > 0 else s


def mul_down(a: float, b: float) -> float:
    # 约定 0·inf = 0
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if math.isinf(a) or math.isinf(b):
            return p
        return p if p < 0 else _MAX
    if abs(p) < _TINY:
        return _down(p)
    e = math.fma(a, b, -p)
    return _down(p) if e < 0 else p


def mul_up(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if math.isinf(a) or math.isinf(b):
            return p
        return p if p > 0 else -_MAX
    if abs(p) < _TINY:
        return _up(p)
    e = math.fma(a, b, -p)
    return _up(p) if e > 0 else p


def _div_residual_sign(a: float, b: float, q: float) -> int:
    r = math.fma(-q, b, a)
    if r == 0.0:
        return 0
    return 1 if (r > 0) == (b > 0) else -1


def div_down(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    q = a / b
    if math.isinf(q):
        if math.isinf(a):
            return q
        return q if q < 0 else _MAX
    if math.isinf(b):
        return q if q <= 0 else 0.0
    if abs(q) < _TINY:
        return _down(q)
    return _down(q) if _div_residual_sign(a, b, q) < 0 else q


def div_up(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    q = a / b
    if math.isinf(q):
        if math.isinf(a):
            return q
        return q if q > 0 else -_MAX
    if math.isinf(b):
        return q if q >= 0 else 0.0
    if abs(q) < _TINY:
        return _up(q)
    return _up(q) if _div_residual_sign(a, b, q) > 0 else q


def sqrt_down(x: float) -> float:
    s = math.sqrt(x)
    if math.isinf(s) or s == 0.0:
        return s
    r = math.fma(-s, s, x)
    return _down(s) if r < 0 else s


def sqrt_up(x: float) -> float:
    s = math.sqrt(x)
    if math.isinf(s) or s == 0.0:
        return s
    r = math.fma(-s, s, x)
    return _up(s) if r > 0 else s


def to_down(v: Number) -> float:
    """不大于 v 的最大浮点数"""
    if isinstance(v, float):
        return v
    f = float(v)
    if math.isinf(f):
        return f if f < 0 else _MAX
    return _down(f) if Fraction(f) > v else f


def to_up(v: Number) -> float:
    """不小于 v 的最小浮点数"""
    if isinstance(v, float):
        return v
    f = float(v)
    if math.isinf(f):
        return f if f > 0 else -_MAX
    return _up(f) if Fraction(f) < v else f


def below(x: "Interval", bound: Number) -> bool:
    """x 的下端点是否落在 bound 的最紧包围之下"""
    return x.lo < to_down(bound)


def _pow_nonneg_down(a: float, n: int) -> float:
    result, base = 1.0, a
    while n:
        if n & 1:
            result = mul_down(result, base)
        base = mul_down(base, base)
        n >>= 1
    return result


def _pow_nonneg_up(a: float, n: int) -> float:
    result, base = 1.0, a
    while n:
        if n & 1:
            result = mul_up(result, base)
        base = mul_up(base, base)
        n >>= 1
    return result


class Interval:
    """闭区间 [lo, hi]，所有运算结果包含真实像集"""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Number, hi: Number | None = None):
        if hi is None:
            hi = lo
        lo_f, hi_f = to_down(lo), to_up(hi)
        if math.isnan(lo_f) or math.isnan(hi_f) or lo_f > hi_f:
            raise DomainError(f"非法区间 [{lo}, {hi}]")
        self.lo = lo_f
        self.hi = hi_f

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "Interval":
        """有理数的最紧浮点包围"""
        return cls(value, value)

    @classmethod
    def hull_of(cls, items: Iterable["Interval"]) -> "Interval":
        items = list(items)
        if not items:
            raise DomainError("空集合没有凸包")
        return cls(min(x.lo for x in items), max(x.hi for x in items))

    @staticmethod
    def coerce(value: "Interval | Number") -> "Interval":
        if isinstance(value, Interval):
            return value
        if isinstance(value, (int, float, Fraction)):
            return Interval(value, value)
        raise TypeError(f"无法转换为区间: {value!r}")

    # ---- 基本属性 ----
    @property
    def mid(self) -> float:
        lo, hi = self.lo, self.hi
        if math.isinf(lo) and math.isinf(hi):
            return 0.0
        if math.isinf(lo):
            return -_MAX if hi > -_MAX else hi
        if math.isinf(hi):
            return _MAX if lo < _MAX else lo
        m = 0.5 * lo + 0.5 * hi
        return min(max(m, lo), hi)

    @property
    def width(self) -> float:
        return add_up(self.hi, -self.lo)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    @property
    def mig(self) -> float:
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def is_point(self) -> bool:
        return self.lo == self.hi

    def is_finite(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def contains(self, other: "Interval | Number") -> bool:
        if isinstance(other, Interval):
            return self.lo <= other.lo and other.hi <= self.hi
        return self.lo <= other <= self.hi

    __contains__ = contains

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def subdivide(self, width: float) -> list["Interval"]:
        """切成宽度不超过 width 的若干片"""
        if not self.is_finite():
            raise DomainError("无界区间不能等分")
        pieces = max(1, math.ceil((self.hi - self.lo) / width))
        if pieces == 1:
            return [self]
        step = (self.hi - self.lo) / pieces
        cuts = [self.lo] + [self.lo + i * step for i in range(1, pieces)] + [self.hi]
        return [Interval(cuts[i], cuts[i + 1]) for i in range(pieces)]

    # ---- 算术 ----
    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> "Interval":
        return self

    def __add__(self, other):
        o = _operand(other)
        if o is None:
            return NotImplemented
        return Interval(add_down(self.lo, o.lo), add_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = _operand(other)
        if o is None:
            return NotImplemented
        return Interval(add_down(self.lo, -o.hi), add_up(self.hi, -o.lo))

    def __rsub__(self, other):
        o = _operand(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = _operand(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        lows = (mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d))
        highs = (mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d))
        return Interval(min(lows), max(highs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _operand(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise DomainError(f"除数区间包含0: {o}")
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        lows = (div_down(a, c), div_down(a, d), div_down(b, c), div_down(b, d))
        highs = (div_up(a, c), div_up(a, d), div_up(b, c), div_up(b, d))
        return Interval(min(lows), max(highs))

    def __rtruediv__(self, other):
        o = _operand(other)
        return NotImplemented if o is None else o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("区间幂只支持整数指数，实数指数使用 pow_real")
        return pow_int(self, n)

    def __abs__(self):
        return iv_abs(self)

    # ---- 比较（确定性判断） ----
    def certainly_lt(self, other) -> bool:
        return self.hi < Interval.coerce(other).lo

    def certainly_le(self, other) -> bool:
        return self.hi <= Interval.coerce(other).lo

    def certainly_gt(self, other) -> bool:
        return self.lo > Interval.coerce(other).hi

    def certainly_ge(self, other) -> bool:
        return self.lo >= Interval.coerce(other).hi

    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def to_pair(self) -> list[float]:
        return [self.lo, self.hi]


ZERO = Interval(0.0)
ONE = Interval(1.0)
PI = Interval(math.pi, _up(math.pi))
HALF_PI = Interval(math.pi / 2, _up(math.pi / 2))
TWO_PI = Interval(2 * math.pi, _up(2 * math.pi))
E = Interval(math.e, _up(math.e))
SQRT2 = Interval(sqrt_down(2.0), sqrt_up(2.0))


def pow_int(x: Interval, n: int) -> Interval:
    if n == 0:
        return ONE
    if n < 0:
        return ONE / pow_int(x, -n)
    if n == 1:
        return x
    if n % 2 == 0:
        lo, hi = x.mig, x.mag
        return Interval(_pow_nonneg_down(lo, n), _pow_nonneg_up(hi, n))
    lo = _pow_nonneg_down(x.lo, n) if x.lo >= 0 else -_pow_nonneg_up(-x.lo, n)
    hi = _pow_nonneg_up(x.hi, n) if x.hi >= 0 else -_pow_nonneg_down(-x.hi, n)
    return Interval(lo, hi)


def sqrt(x: Interval | Number) -> Interval:
    x = Interval.coerce(x)
    if x.lo < 0:
        raise DomainError(f"sqrt 的参数下端小于0: {x}")
    return Interval(sqrt_down(x.lo), sqrt_up(x.hi))


def _exp_down(v: float) -> float:
    if v == 0.0:
        return 1.0
    try:
        return max(0.0, down2(math.exp(v)))
    except OverflowError:
        return _MAX


def _exp_up(v: float) -> float:
    if v == 0.0:
        return 1.0
    try:
        return up2(math.exp(v))
    except OverflowError:
        return INF


def exp(x: Interval | Number) -> Interval:
    x = Interval.coerce(x)
    return Interval(_exp_down(x.lo), _exp_up(x.hi))


def _log_down(v: float) -> float:
    if v == 1.0:
        return 0.0
    return down2(math.log(v))


def _log_up(v: float) -> float:
    if v == 1.0:
        return 0.0
    if math.isinf(v):
        return INF
    return up2(math.log(v))


def log(x: Interval | Number) -> Interval:
    x = Interval.coerce(x)
    if x.lo <= 0:
        raise DomainError(f"log 的参数下端不为正: {x}")
    return Interval(_log_down(x.lo), _log_up(x.hi))


def pow_real(x: Interval | Number, y: Interval | Number) -> Interval:
    """x^y = exp(y log x)，要求 x > 0"""
    return exp(Interval.coerce(y) * log(x))


def iv_abs(x: Interval) -> Interval:
    if x.lo >= 0:
        return x
    if x.hi <= 0:
        return -x
    return Interval(0.0, max(-x.lo, x.hi))


def iv_min(x: Interval, y: Interval) -> Interval:
    return Interval(min(x.lo, y.lo), min(x.hi, y.hi))


def iv_max(x: Interval, y: Interval) -> Interval:
    return Interval(max(x.lo, y.lo), max(x.hi, y.hi))


def iv_sum(items: Iterable[Interval]) -> Interval:
    total = ZERO
    for item in items:
        total = total + item
    return total


_PRIMITIVES = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
    "sqrt": sqrt,
    "exp": exp,
    "log": log,
    "pow_int": pow_int,
    "abs": iv_abs,
    "min": iv_min,
    "max": iv_max,
}


def iv_primitive(op: str, *args) -> Interval:
    """按名称调用区间原语，参数可以是区间或数（pow_int 的指数为整数）"""
    try:
        fn = _PRIMITIVES[op]
    except KeyError:
        raise DomainError(f"未知的区间原语: {op}") from None
    if op == "pow_int":
        return fn(Interval.coerce(args[0]), int(args[1]))
    return fn(*(Interval.coerce(a) for a in args))


class Box:
    """若干区间的笛卡尔积，分支定界的基本单元"""

    __slots__ = ("dims",)

    def __init__(self, dims: Sequence[Interval | Number | tuple]):
        converted = []
        for d in dims:
            if isinstance(d, tuple):
                converted.append(Interval(*d))
            else:
                converted.append(Interval.coerce(d))
        if not converted:
            raise DomainError("Box 至少需要一个维度")
        self.dims = tuple(converted)

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, i: int) -> Interval:
        return self.dims[i]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.dims)

    def widest(self) -> int:
        widths = [d.width for d in self.dims]
        return widths.index(max(widths))

    def split(self) -> tuple["Box", "Box"]:
        i = self.widest()
        left, right = self.dims[i].split()
        before, after = self.dims[:i], self.dims[i + 1:]
        return Box(before + (left,) + after), Box(before + (right,) + after)

    def can_split(self) -> bool:
        d = self.dims[self.widest()]
        m = d.mid
        return d.lo < m < d.hi

    def midpoint(self) -> "Box":
        return Box([Interval(d.mid) for d in self.dims])

    def contains_point(self, point: Sequence[Number]) -> bool:
        return all(d.contains(p) for d, p in zip(self.dims, point))

    def sort_key(self) -> tuple:
        return tuple((d.lo, d.hi) for d in self.dims)

    def to_record(self) -> list[list[float]]:
        return [d.to_pair() for d in self.dims]

    def __repr__(self) -> str:
        return f"Box({list(self.dims)!r})"


def _operand(value) -> Interval | None:
    if isinstance(value, Interval):
        return value
    if isinstance(value, (int, float, Fraction)):
        return Interval(value, value)
    return None
