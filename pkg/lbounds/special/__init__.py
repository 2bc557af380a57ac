"""
特殊函数包围

实轴 ζ 与 log Γ 的 Stirling 包围，计数公式中的 g(a,T) 与 E(a,d,T)
"""

from .zeta import log_zeta, zeta_real
from .gamma import E_of, g_of, im_lngamma, lngamma

__all__ = ['zeta_real', 'log_zeta', 'im_lngamma', 'lngamma', 'g_of', 'E_of']
