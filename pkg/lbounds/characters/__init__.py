"""
Dirichlet 特征: 枚举、导子、奇偶性与根数
"""

from .character import (CharacterMeta, DirichletCharacter, character_from_label, conductor_parity,
                        enumerate_characters, enumerate_primitive, unit_group)
from .gauss import GaussRoot, gauss_root, gauss_sum

__all__ = [
    'DirichletCharacter', 'CharacterMeta', 'conductor_parity', 'enumerate_characters',
    'enumerate_primitive', 'character_from_label', 'unit_group',
    'GaussRoot', 'gauss_root', 'gauss_sum',
]
