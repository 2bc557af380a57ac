"""
Dirichlet 特征

单位群 (Z/qZ)* 按中国剩余定理分解为循环因子，每个因子取固定生成元
（奇素数幂取最小原根，2^e 取 -1 与 5）。特征由指数向量 (k_i) 给出，
χ(g_i) = e(k_i/n_i)，值以有理数“圈数”精确保存，只在求值时转成复区间。
编号按指数向量的字典序，标签为 "q.index"。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Optional

from loguru import logger
from sympy import factorint, primitive_root
from sympy.ntheory.modular import crt

from tools.exception import DomainError

from ..interval.cinterval import ComplexInterval, unit_root


@dataclass(frozen=True)
class LocalFactor:
    """(Z/p^eZ)* 的生成元与离散对数表"""
    p: int
    e: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    logs: dict

    @property
    def modulus(self) -> int:
        return self.p ** self.e


def _local_factor(p: int, e: int) -> LocalFactor:
    pe = p ** e
    if p == 2:
        if e == 1:
            return LocalFactor(2, 1, (), (), {1: ()})
        if e == 2:
            return LocalFactor(2, 2, (pe - 1,), (2,), {1: (0,), 3: (1,)})
        half = 2 ** (e - 2)
        logs = {}
        for u in (0, 1):
            x = 1 if u == 0 else pe - 1
            for v in range(half):
                logs[x] = (u, v)
                x = x * 5 % pe
        return LocalFactor(2, e, (pe - 1, 5), (2, half), logs)
    g = int(primitive_root(pe))
    n = pe // p * (p - 1)
    logs, x = {}, 1
    for j in range(n):
        logs[x] = (j,)
        x = x * g % pe
    return LocalFactor(p, e, (g,), (n,), logs)


class UnitGroup:
    """(Z/qZ)* 的循环分解"""

    def __init__(self, q: int):
        if q < 1:
            raise DomainError(f"模必须为正整数: {q}")
        self.q = q
        self.factors = [_local_factor(p, e) for p, e in sorted(factorint(q).items())]
        self.orders: tuple[int, ...] = tuple(n for f in self.factors for n in f.orders)
        self.generators: tuple[int, ...] = tuple(
            self._lift(f, g) for f in self.factors for g in f.generators)

    def _lift(self, factor: LocalFactor, g: int) -> int:
        pe = factor.modulus
        if pe == self.q:
            return g % self.q
        x, _ = crt([pe, self.q // pe], [g % pe, 1])
        return int(x)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def dlog(self, n: int) -> Optional[tuple[int, ...]]:
        """n 在生成元下的指数向量，n 不是单位时返回 None"""
        if math.gcd(n, self.q) != 1:
            return None
        out: tuple[int, ...] = ()
        for f in self.factors:
            out += f.logs[n % f.modulus]
        return out


@lru_cache(maxsize=256)
def unit_group(q: int) -> UnitGroup:
    return UnitGroup(q)


@dataclass(frozen=True)
class CharacterMeta:
    conductor: int
    a: int
    is_primitive: bool
    is_real: bool

    def to_dict(self) -> dict:
        return {"conductor": self.conductor, "a": self.a,
                "is_primitive": self.is_primitive, "is_real": self.is_real}


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]

    @property
    def group(self) -> UnitGroup:
        return unit_group(self.modulus)

    @cached_property
    def index(self) -> int:
        """指数向量的混合进制编号"""
        idx = 0
        for k, n in zip(self.exponents, self.group.orders):
            idx = idx * n + k
        return idx

    @property
    def label(self) -> str:
        return f"{self.modulus}.{self.index}"

    def turns(self, n: int) -> Optional[Fraction]:
        """χ(n) = e(turns)，n 不与 q 互素时返回 None"""
        logs = self.group.dlog(n % self.modulus)
        if logs is None:
            return None
        total = sum((Fraction(k * j, order) for k, j, order in
                     zip(self.exponents, logs, self.group.orders)), Fraction(0))
        return total % 1

    @cached_property
    def value_table(self) -> dict[int, Fraction]:
        """单位剩余类 -> 圈数"""
        return {n: self.turns(n) for n in range(1, self.modulus + 1)
                if math.gcd(n, self.modulus) == 1}

    def __call__(self, n: int) -> ComplexInterval:
        t = self.turns(n)
        if t is None:
            return ComplexInterval(0.0)
        return unit_root(t)

    def conj(self) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple((-k) % n for k, n in
                                                      zip(self.exponents, self.group.orders)))

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def is_real(self) -> bool:
        return all(2 * k % n == 0 for k, n in zip(self.exponents, self.group.orders))

    @property
    def order(self) -> int:
        return math.lcm(1, *(n // math.gcd(k, n) for k, n in zip(self.exponents, self.group.orders)))

    @property
    def parity(self) -> int:
        """a = 0 当 χ(-1) = 1，否则 a = 1"""
        return 0 if self.turns(-1) == 0 else 1

    @cached_property
    def conductor(self) -> int:
        f, pos = 1, 0
        for factor in self.group.factors:
            local = self.exponents[pos:pos + len(factor.orders)]
            pos += len(factor.orders)
            f *= factor.p ** _local_conductor_exponent(factor, local)
        return f

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.label})"


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _local_conductor_exponent(factor: LocalFactor, local: tuple[int, ...]) -> int:
    if factor.p != 2:
        (k,) = local
        return 0 if k == 0 else factor.e - _valuation(k, factor.p)
    if factor.e == 1:
        return 0
    if factor.e == 2:
        return 0 if local[0] == 0 else 2
    u, v = local
    if v == 0:
        return 0 if u == 0 else 2
    return factor.e - _valuation(v, 2)


def conductor_parity(chi: DirichletCharacter) -> CharacterMeta:
    f = chi.conductor
    return CharacterMeta(conductor=f, a=chi.parity, is_primitive=f == chi.modulus, is_real=chi.is_real)


def enumerate_characters(q: int) -> Iterator[DirichletCharacter]:
    """模 q 的全部特征，按编号递增"""
    for exponents in product(*(range(n) for n in unit_group(q).orders)):
        yield DirichletCharacter(q, exponents)


def enumerate_primitive(q: int, one_per_pair: bool = False) -> list[DirichletCharacter]:
    """
    模 q 的全部本原特征

    one_per_pair 为真时每对共轭只保留编号较小的一个。
    """
    if q < 2:
        raise DomainError(f"enumerate_primitive 需要 q ≥ 2: {q}")
    out = []
    for chi in enumerate_characters(q):
        if chi.conductor != q:
            continue
        if one_per_pair and chi.conj().index < chi.index:
            continue
        out.append(chi)
    logger.debug(f"q={q}: 本原特征 {len(out)} 个")
    return out


def character_from_label(label: str) -> DirichletCharacter:
    """由 "q.index" 还原特征"""
    try:
        q_text, idx_text = label.split(".")
        q, idx = int(q_text), int(idx_text)
    except ValueError as e:
        raise DomainError(f"无效的特征标签: {label}") from e
    orders = unit_group(q).orders
    if not 0 <= idx < math.prod(orders):
        raise DomainError(f"编号超出范围: {label}")
    exponents = []
    for n in reversed(orders):
        idx, k = divmod(idx, n)
        exponents.append(k)
    return DirichletCharacter(q, tuple(reversed(exponents)))
