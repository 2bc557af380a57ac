"""
L(s,χ) 与完备化 Λ(s,χ) = (q/π)^{(s+a)/2}·Γ((s+a)/2)·L(s,χ)

函数方程 Λ(s,χ) = ε(χ)·Λ(1-s,χ̄)
"""

from fractions import Fraction

from tools.exception import NotPrimitive

from ..characters.character import DirichletCharacter
from ..characters.gauss import gauss_root
from ..interval.cinterval import ComplexInterval, real_power
from ..interval.interval import PI, Interval
from ..special.gamma import lngamma
from .hurwitz import hurwitz_zeta


def require_primitive(chi: DirichletCharacter):
    if chi.modulus < 2 or chi.conductor != chi.modulus:
        raise NotPrimitive(f"需要模大于1的本原特征: {chi.label}，导子 {chi.conductor}")


def gamma_factor(s, a: int, q: int) -> ComplexInterval:
    """(q/π)^{(s+a)/2}·Γ((s+a)/2)"""
    z = (ComplexInterval.coerce(s) + a) / 2
    re, im = lngamma(z.re, z.im)
    return real_power(q / PI, z) * ComplexInterval(re, im).exp()


def l_value(s, chi: DirichletCharacter, reflect: bool = False) -> ComplexInterval:
    """
    L(s,χ) = q^{-s}·Σ_{a=1}^{q} χ(a)·ζ(s, a/q)

    reflect 为真且 Re s < 0 时经函数方程由 L(1-s,χ̄) 求值。
    """
    require_primitive(chi)
    s = ComplexInterval.coerce(s)
    q = chi.modulus
    if reflect and s.re.hi < 0:
        eps = gauss_root(chi).epsilon
        other = completed_lambda(1 - s, chi.conj())
        return eps * other / gamma_factor(s, chi.parity, q)

    total = ComplexInterval(0.0)
    for a in chi.value_table:
        total = total + chi(a) * hurwitz_zeta(s, Interval.from_fraction(Fraction(a, q)))
    return total * real_power(Interval(q), -s)


def completed_lambda(s, chi: DirichletCharacter) -> ComplexInterval:
    s = ComplexInterval.coerce(s)
    return gamma_factor(s, chi.parity, chi.modulus) * l_value(s, chi)


def fe_residual(s, chi: DirichletCharacter) -> ComplexInterval:
    """Λ(s,χ) - ε(χ)·Λ(1-s,χ̄)，包围应含0"""
    s = ComplexInterval.coerce(s)
    eps = gauss_root(chi).epsilon
    return completed_lambda(s, chi) - eps * completed_lambda(1 - s, chi.conj())
