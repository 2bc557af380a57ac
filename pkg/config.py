"""
LZeroCount 配置文件

区间引擎、零点扫描与界的组装所用的默认参数，命令行参数可以覆盖
"""

from fractions import Fraction


class SystemConfig:
    """系统配置类"""
    project_name: str = 'LZeroCount'
    project_version: str = '0.1.0'
    log_level: str = 'INFO'
    enable_console_log: bool = True
    enable_file_log: bool = True
    log_dir: str = 'logs'
    output_dir: str = 'output'


class IntervalConfig:
    """区间算术与分支定界配置类"""
    tolerance: float = 1e-9
    box_budget: int = 10 ** 7
    # 半无穷区间 [5/7, ∞) 的有限验证上限
    t_max: float = 1000.0
    t_min: Fraction = Fraction(5, 7)
    # g_of / E_of 在T区间宽度超过该值时先切分
    split_width: float = 0.25


class ScanConfig:
    """零点扫描配置类"""
    q_max: int = 100
    ell_max: float = 6.0
    tol: float = 1e-9
    grid_step: float = 0.125
    refine_rounds: int = 4
    nudge_factor: float = 1 + 2 ** -20
    nudge_tries: int = 64
    segment_steps: int = 32
    segment_halvings: int = 12
    stirling_shift: int = 16
    workers: int = 1
    schema_version: int = 1


class BoundConfig:
    """界的组装配置类"""
    J1: int = 64
    J2: int = 24
    quad_tol: float = 2e-5
    quad_budget: int = 40000
    quad_initial_cells: int = 64
    small_ell: float = 1.567
    large_ell: float = 27.02
    middle_ell: tuple[float, float] = (5.98, 28.0)
    theorem_slope: float = 0.22737
    # 参数表: (T, a) -> {k: (c*, r*)}，c = c*/2^11, r = r*/2^11
    table2: dict = {
        (Fraction(5, 7), 0): {5: (2822, 5006), 6: (2719, 4694), 7: (2640, 4447), 8: (2577, 4246), 9: (2527, 4081)},
        (Fraction(5, 7), 1): {5: (2896, 5176), 6: (2770, 4836), 7: (2677, 4566), 8: (2606, 4348), 9: (2550, 4168)},
        (Fraction(1), 0): {5: (2886, 5212), 6: (2778, 4902), 7: (2694, 4651), 8: (2628, 4444), 9: (2575, 4272)},
        (Fraction(1), 1): {5: (2961, 5388), 6: (2831, 5046), 7: (2734, 4771), 8: (2660, 4546), 9: (2600, 4358)},
        (Fraction(2), 0): {6: (2956, 5481), 7: (2861, 5221), 8: (2785, 5001), 9: (2723, 4812)},
        (Fraction(2), 1): {7: (2906, 5346), 8: (2822, 5107), 9: (2753, 4904)},
    }
    # 导子表的发表值，仅用于比较与标记，None 表示由数据集得出的星号项
    table1: dict = {
        (Fraction(5, 7), 0): [42, 172, None, None, None, 3289, 15991, 82233, 443412, 2489523],
        (Fraction(5, 7), 1): [16, 66, None, None, None, 1909, 9007, 45137, 238003, 1310445],
        (Fraction(1), 0): [36, 148, None, None, None, 1616, 6256, 25252, 105597, 455195],
        (Fraction(1), 1): [12, 42, 408, None, None, 905, 3425, 13554, 55727, 236710],
        (Fraction(2), 0): [16, 28, 120, 330, None, None, 660, 1669, 4289, 11185],
        (Fraction(2), 1): [10, 18, 64, 210, 630, None, None, 1050, 2677, 6932],
    }
