"""
精确校验服务
构造稠密的 ζ 与 μ 矩阵,并据此校验直线程序
"""

import logging
import random
from typing import NamedTuple, Optional, Tuple

from zetaslp.models.matrix import TransformMatrix
from zetaslp.models.poset import Poset, iter_bits
from zetaslp.models.slp import Slp

logger = logging.getLogger(__name__)


class VerificationResult(NamedTuple):
    """
    ok 为真表示程序矩阵与预言矩阵完全相等;
    否则 witness 为第一个不一致的 (x, y, 程序给出的值, 应有的值)
    """

    ok: bool
    witness: Optional[Tuple[int, int, int, int]] = None


def zeta_matrix(poset: Poset) -> TransformMatrix:
    """ζ[x][y] = 1 当且仅当 x ≤ y"""
    v = poset.size
    entries = [[1 if poset.leq(x, y) else 0 for y in range(v)] for x in range(v)]
    return TransformMatrix(entries, 'zeta')


def mobius_matrix(poset: Poset) -> TransformMatrix:
    """
    ζ 的精确整数逆,沿线性扩张回代:
    μ(x,x) = 1, μ(x,y) = −Σ_{x ≤ z < y} μ(x,z)
    """
    v = poset.size
    entries = [[0] * v for _ in range(v)]
    extension = poset.linear_extension()
    for x in range(v):
        row = entries[x]
        above_x = poset.up_set(x)
        for y in extension:
            if not (above_x >> y) & 1:
                continue
            if y == x:
                row[y] = 1
                continue
            below_y = poset.down_set(y) & above_x & ~(1 << y)
            row[y] = -sum(row[z] for z in iter_bits(below_y))
    return TransformMatrix(entries, 'moebius')


def oracle_matrix(poset: Poset, kind: str) -> TransformMatrix:
    if kind == 'zeta':
        return zeta_matrix(poset)
    if kind == 'moebius':
        return mobius_matrix(poset)
    raise ValueError(f'未知的变换类型 {kind}')


def apply(matrix: TransformMatrix, vector) -> list:
    return matrix.apply(vector)


def verify_slp(poset: Poset, program: Slp, kind: str) -> VerificationResult:
    """
    比较程序展开后的矩阵与预言矩阵

    Args:
        poset: 偏序集
        program: 直线程序
        kind: zeta 或 moebius

    Returns:
        VerificationResult

    Raises:
        ValueError: 宽度不一致或类型未知
    """
    if program.v != poset.size:
        raise ValueError(f'程序宽度 {program.v} 与元素个数 {poset.size} 不一致')
    witness = program.to_matrix().first_difference(oracle_matrix(poset, kind))
    if witness is None:
        logger.info(f'校验通过: {kind}, 长度 {program.length}')
        return VerificationResult(True)
    x, y, got, want = witness
    logger.info(f'校验失败: ({poset.name(x)}, {poset.name(y)}) 得到 {got},应为 {want}')
    return VerificationResult(False, witness)


def smoke_check(poset: Poset, program: Slp, kind: str, trials: int = 100, seed: int = 0) -> bool:
    """用随机整数向量比较 evaluate 与矩阵乘法的结果"""
    matrix = oracle_matrix(poset, kind)
    rng = random.Random(seed)
    for _ in range(trials):
        vector = [rng.randint(-1000, 1000) for _ in range(poset.size)]
        if program.evaluate(vector) != matrix.apply(vector):
            return False
    return True
