"""
lbounds: Dirichlet L 函数低处零点计数的严格界

区间引擎、特殊函数包围、特征与L函数、界的组装与验证
"""

__version__ = "0.1.0"
