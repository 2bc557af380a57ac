"""
区间算术核心

外向舍入区间、初等超越函数、二阶Jet与分支定界证明器
"""

from .interval import Box, Interval, E, HALF_PI, PI, SQRT2, TWO_PI, iv_primitive
from .special import iv_special
from .jet import Jet
from .prover import ProofOutcome, enclose_range, prove_upper_bound

__all__ = [
    'Interval', 'Box', 'PI', 'HALF_PI', 'TWO_PI', 'E', 'SQRT2',
    'iv_primitive', 'iv_special', 'Jet',
    'ProofOutcome', 'enclose_range', 'prove_upper_bound',
]
