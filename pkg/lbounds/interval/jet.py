"""
二阶前向自动微分（区间系数）

Jet(v, d, dd) 表示函数在某区间上的值、一阶与二阶导数包围，
配合中点公式给出严格的积分包围:
    ∫_I f ∈ w·f(m) + (w³/24)·f''(I)
"""

from . import interval as iv
from . import special as sp
from .interval import Interval


class Jet:
    __slots__ = ("v", "d", "dd")

    def __init__(self, v, d=0.0, dd=0.0):
        self.v = Interval.coerce(v)
        self.d = Interval.coerce(d)
        self.dd = Interval.coerce(dd)

    @classmethod
    def variable(cls, x) -> "Jet":
        return cls(x, 1.0, 0.0)

    @staticmethod
    def lift(x) -> "Jet":
        return x if isinstance(x, Jet) else Jet(x)

    def __neg__(self):
        return Jet(-self.v, -self.d, -self.dd)

    def __add__(self, other):
        o = Jet.lift(other)
        return Jet(self.v + o.v, self.d + o.d, self.dd + o.dd)

    __radd__ = __add__

    def __sub__(self, other):
        o = Jet.lift(other)
        return Jet(self.v - o.v, self.d - o.d, self.dd - o.dd)

    def __rsub__(self, other):
        return Jet.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            c = Interval.coerce(other)
            return Jet(self.v * c, self.d * c, self.dd * c)
        return Jet(
            self.v * other.v,
            self.d * other.v + self.v * other.d,
            self.dd * other.v + 2 * (self.d * other.d) + self.v * other.dd,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            c = Interval.coerce(other)
            return Jet(self.v / c, self.d / c, self.dd / c)
        w = self.v / other.v
        w1 = (self.d - w * other.d) / other.v
        w2 = (self.dd - 2 * (w1 * other.d) - w * other.dd) / other.v
        return Jet(w, w1, w2)

    def __rtruediv__(self, other):
        return Jet.lift(other) / self

    def square(self) -> "Jet":
        return Jet(iv.pow_int(self.v, 2), 2 * (self.v * self.d),
                   2 * (iv.pow_int(self.d, 2) + self.v * self.dd))

    def log(self) -> "Jet":
        inv = 1 / self.v
        d1 = self.d * inv
        return Jet(iv.log(self.v), d1, self.dd * inv - iv.pow_int(d1, 2))

    def sqrt(self) -> "Jet":
        s = iv.sqrt(self.v)
        d1 = self.d / (2 * s)
        return Jet(s, d1, (self.dd - 2 * iv.pow_int(d1, 2)) / (2 * s))

    def sin(self) -> "Jet":
        s, c = sp.sin(self.v), sp.cos(self.v)
        return Jet(s, c * self.d, c * self.dd - s * iv.pow_int(self.d, 2))

    def cos(self) -> "Jet":
        s, c = sp.sin(self.v), sp.cos(self.v)
        return Jet(c, -(s * self.d), -(c * iv.pow_int(self.d, 2)) - s * self.dd)

    def __repr__(self) -> str:
        return f"Jet({self.v!r}, {self.d!r}, {self.dd!r})"


# 区间与Jet通用的函数入口，被积函数只写一次
def jlog(x):
    return x.log() if isinstance(x, Jet) else iv.log(x)


def jsqrt(x):
    return x.sqrt() if isinstance(x, Jet) else iv.sqrt(x)


def jsin(x):
    return x.sin() if isinstance(x, Jet) else sp.sin(x)


def jcos(x):
    return x.cos() if isinstance(x, Jet) else sp.cos(x)


def jsquare(x):
    return x.square() if isinstance(x, Jet) else iv.pow_int(x, 2)


def midpoint_rule(fn, cell: Interval) -> Interval:
    """二阶中点公式的严格包围；fn 接受 Jet 或区间

    浮点中点 m 未必是精确中点，按 m 处的泰勒展开计入一阶项:
    ∫ f ∈ w·f(m) + f'(m)·(B²-A²)/2 + f''(I)·(B³-A³)/6，A = a-m, B = b-m
    """
    m = Interval(cell.mid)
    A = Interval(cell.lo) - m
    B = Interval(cell.hi) - m
    w = Interval(cell.hi) - Interval(cell.lo)
    at_mid = Jet.lift(fn(Jet.variable(m)))
    curvature = Jet.lift(fn(Jet.variable(cell))).dd
    first = at_mid.d * (iv.pow_int(B, 2) - iv.pow_int(A, 2)) / 2
    second = curvature * (iv.pow_int(B, 3) - iv.pow_int(A, 3)) / 6
    return w * at_mid.v + first + second
