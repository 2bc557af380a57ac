"""
L 函数引擎: Hurwitz ζ、L(s,χ)、Hardy Z、辐角原理计数、零点扫描与 |L| 的上界
"""

from .hurwitz import hurwitz_zeta
from .lvalue import completed_lambda, fe_residual, l_value
from .hardy import hardy_Z
from .counting import CountResult, arg_on_vertical, arg_principal_count, euler_seed_bound
from .scanner import ZeroRecord, count_from_records, scan_zeros, t_for_ell
from .majorant import l_upper_bound

__all__ = [
    'hurwitz_zeta', 'l_value', 'completed_lambda', 'fe_residual', 'hardy_Z',
    'CountResult', 'arg_principal_count', 'arg_on_vertical', 'euler_seed_bound',
    'ZeroRecord', 'scan_zeros', 'count_from_records', 't_for_ell', 'l_upper_bound',
]
