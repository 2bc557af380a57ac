"""
Hardy Z 函数

Z(t,χ) = e^{iθ(t)}·L(1/2+it,χ)，
θ(t) = (t/2)·log(q/π) + Im lnΓ((1/2+a+it)/2) - arg ε(χ)/2，
由函数方程知 Z 对实数 t 取实值。
"""

from functools import lru_cache

from loguru import logger

from config import ScanConfig
from tools.exception import DomainError, LBoundsError

from ..characters.character import DirichletCharacter
from ..characters.gauss import gauss_root
from ..interval import interval as iv
from ..interval import special as sp
from ..interval.cinterval import ComplexInterval
from ..interval.interval import PI, Interval
from ..special.gamma import lngamma
from .lvalue import l_value, require_primitive


@lru_cache(maxsize=4096)
def root_angle(chi: DirichletCharacter) -> Interval:
    """arg ε(χ) 的一个固定分支"""
    eps = gauss_root(chi).epsilon
    try:
        return eps.arg()
    except DomainError:
        return eps.arg_near_pi()


def hardy_theta(t, chi: DirichletCharacter) -> Interval:
    t = Interval.coerce(t)
    x = (0.5 + chi.parity) / 2
    _, im = lngamma(Interval(x), t / 2, shift=ScanConfig.stirling_shift)
    return t / 2 * iv.log(chi.modulus / PI) + im - root_angle(chi) / 2


def hardy_Z_complex(t, chi: DirichletCharacter) -> ComplexInterval:
    require_primitive(chi)
    t = Interval.coerce(t)
    theta = hardy_theta(t, chi)
    rotation = ComplexInterval(sp.cos(theta), sp.sin(theta))
    return rotation * l_value(ComplexInterval(0.5, t), chi)


def hardy_Z(t, chi: DirichletCharacter) -> Interval:
    """Z(t,χ) 的实部包围；虚部包围必须含0"""
    z = hardy_Z_complex(t, chi)
    if not z.im.contains(0.0):
        logger.error(f"{chi.label}: Z({t}) 的虚部 {z.im} 不含0")
        raise LBoundsError(f"Hardy Z 的虚部包围不含0: {chi.label}, t={t}")
    return z.re


def sign_of(value: Interval) -> int:
    """严格符号，无法判定时为0"""
    if value.lo > 0:
        return 1
    if value.hi < 0:
        return -1
    return 0
