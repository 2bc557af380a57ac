"""
界的组装: 参数、Jensen 积分、Backlund 配对、定理形式与复核
"""

from .params import BoundParams, compute_ell, main_term, select_params
from .jensen import F_theta, jensen_integral, kappas, lemma_terms
from .backlund import S_limit_bound, arg_segment_bound
from .assembly import BoundReport, assemble_N_bound
from .theorem import c1c2_curve, derive_C2, theorem_bound
from .verify import verify_assembly
from .census import primitive_census, table_entry, zero_budget

__all__ = [
    'BoundParams', 'compute_ell', 'main_term', 'select_params',
    'F_theta', 'jensen_integral', 'kappas', 'lemma_terms',
    'S_limit_bound', 'arg_segment_bound', 'BoundReport', 'assemble_N_bound',
    'theorem_bound', 'derive_C2', 'c1c2_curve', 'verify_assembly',
    'primitive_census', 'zero_budget', 'table_entry',
]
