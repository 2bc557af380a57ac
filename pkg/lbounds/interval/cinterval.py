"""
复矩形区间 re + i·im
"""

from fractions import Fraction

from tools.exception import DomainError

from . import interval as iv
from . import special as sp
from .interval import HALF_PI, PI, TWO_PI, Interval


class ComplexInterval:
    __slots__ = ("re", "im")

    def __init__(self, re, im=0.0):
        self.re = Interval.coerce(re)
        self.im = Interval.coerce(im)

    @staticmethod
    def coerce(value) -> "ComplexInterval":
        if isinstance(value, ComplexInterval):
            return value
        if isinstance(value, complex):
            return ComplexInterval(value.real, value.imag)
        return ComplexInterval(value, 0.0)

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __add__(self, other):
        o = ComplexInterval.coerce(other)
        return ComplexInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = ComplexInterval.coerce(other)
        return ComplexInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ComplexInterval.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (Interval, int, float, Fraction)):
            c = Interval.coerce(other)
            return ComplexInterval(self.re * c, self.im * c)
        o = ComplexInterval.coerce(other)
        return ComplexInterval(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Interval, int, float, Fraction)):
            c = Interval.coerce(other)
            return ComplexInterval(self.re / c, self.im / c)
        o = ComplexInterval.coerce(other)
        n = o.abs2()
        return ComplexInterval((self.re * o.re + self.im * o.im) / n,
                               (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        return ComplexInterval.coerce(other) / self

    def conj(self) -> "ComplexInterval":
        return ComplexInterval(self.re, -self.im)

    def times_i(self) -> "ComplexInterval":
        return ComplexInterval(-self.im, self.re)

    def abs2(self) -> Interval:
        return iv.pow_int(self.re, 2) + iv.pow_int(self.im, 2)

    def abs(self) -> Interval:
        return iv.sqrt(self.abs2())

    def contains(self, z) -> bool:
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    def contains_zero(self) -> bool:
        return self.re.contains(0.0) and self.im.contains(0.0)

    def arg(self) -> Interval:
        """主值辐角 (-π, π]，矩形不得包含0或跨越负实轴"""
        x, y = self.re, self.im
        if x.lo > 0:
            return sp.atan(y / x)
        if y.lo > 0:
            return HALF_PI - sp.atan(x / y)
        if y.hi < 0:
            return -HALF_PI - sp.atan(x / y)
        raise DomainError(f"矩形包含0或跨越负实轴，辐角不连续: {self}")

    def arg_near_pi(self) -> Interval:
        """以 π 为中心的分支 (0, 2π)，用于跨越负实轴的矩形"""
        x, y = self.re, self.im
        if x.hi < 0:
            return PI + sp.atan(y / x)
        if y.lo > 0:
            return HALF_PI - sp.atan(x / y)
        if y.hi < 0:
            return 3 * HALF_PI - sp.atan(x / y)
        raise DomainError(f"矩形包含0或跨越正实轴: {self}")

    def exp(self) -> "ComplexInterval":
        m = iv.exp(self.re)
        return ComplexInterval(m * sp.cos(self.im), m * sp.sin(self.im))

    def log(self) -> "ComplexInterval":
        return ComplexInterval(iv.log(self.abs2()) / 2, self.arg())

    def hull(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(self.re.hull(other.re), self.im.hull(other.im))

    def __repr__(self) -> str:
        return f"ComplexInterval({self.re!r}, {self.im!r})"


def unit_root(turns: Fraction) -> ComplexInterval:
    """e^{2πi·turns}，turns 为有理数，四分之一圈倍数时精确"""
    turns = Fraction(turns) % 1
    exact = {
        Fraction(0): (1.0, 0.0),
        Fraction(1, 4): (0.0, 1.0),
        Fraction(1, 2): (-1.0, 0.0),
        Fraction(3, 4): (0.0, -1.0),
    }
    if turns in exact:
        return ComplexInterval(*exact[turns])
    angle = TWO_PI * Interval.from_fraction(turns)
    return ComplexInterval(sp.cos(angle), sp.sin(angle))


def real_power(base: Interval, s: ComplexInterval) -> ComplexInterval:
    """base^s = e^{s·log base}，base > 0"""
    L = iv.log(base)
    return ComplexInterval(s.re * L, s.im * L).exp()
