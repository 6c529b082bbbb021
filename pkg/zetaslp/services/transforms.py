"""
变换编译服务
把格上的 zeta / Möbius 变换编译为直线程序:基于并不可约元的两种算法,
以及沿边标号顺序加减的两种算法
"""

import itertools
import logging
import random
from typing import List, Tuple

from zetaslp.exceptions import LabelingError, OrderError
from zetaslp.models.labeling import EdgeLabeling
from zetaslp.models.lattice import JirOrder, LatticeInfo, spectrum_masks
from zetaslp.models.poset import Poset
from zetaslp.models.slp import ADD, SUB, Slp, Statement

logger = logging.getLogger(__name__)

ALGORITHMS = ('zeta-bjorklund', 'mobius-bjorklund', 'zeta-edges', 'mobius-edges')
ORDERS = ('height', 'id', 'reverse-height')


def order_by_height(lattice: LatticeInfo) -> JirOrder:
    """并不可约元按 (高度, 编号) 升序排列"""
    return JirOrder(
        lattice,
        sorted(lattice.join_irreducibles, key=lambda x: (lattice.heights[x], x)),
    )


def order_by_id(lattice: LatticeInfo) -> JirOrder:
    return JirOrder(lattice, lattice.join_irreducibles)


def order_reverse_height(lattice: LatticeInfo) -> JirOrder:
    """自顶向下:order_by_height 的逆序"""
    return JirOrder(lattice, tuple(reversed(order_by_height(lattice).elements)))


def random_order(lattice: LatticeInfo, rng: random.Random) -> JirOrder:
    elements = list(lattice.join_irreducibles)
    rng.shuffle(elements)
    return JirOrder(lattice, elements)


def make_order(lattice: LatticeInfo, name: str) -> JirOrder:
    """
    按命令行名称构造排列: height、id、reverse-height 或 random:<seed>

    Raises:
        OrderError: 名称无法识别
    """
    if name == 'height':
        return order_by_height(lattice)
    if name == 'id':
        return order_by_id(lattice)
    if name == 'reverse-height':
        return order_reverse_height(lattice)
    if name.startswith('random:'):
        try:
            seed = int(name.split(':', 1)[1])
        except ValueError:
            raise OrderError(f'随机种子必须是整数: {name}')
        return random_order(lattice, random.Random(seed))
    raise OrderError(f'未知的排列策略 {name}')


def _bjorklund_phases(lattice: LatticeInfo, order: JirOrder) -> List[List[Tuple[int, int]]]:
    """
    逐个并不可约元 i 扫描所有 x ≱ i(编号升序),令 y = x ∨ i,
    当 φ_{i-1}(x) = φ_{i-1}(y) 时记录 (y, x)

    Returns:
        每个阶段的 (target, source) 列表,阶段顺序与 order 一致
    """
    base = lattice.base
    masks = spectrum_masks(lattice, order)
    phases = []
    for k, h in enumerate(order):
        prefix = (1 << k) - 1
        above_h = base.up_set(h)
        phase = []
        for x in range(lattice.size):
            if (above_h >> x) & 1:
                continue
            y = lattice.join(x, h)
            if masks[x] & prefix == masks[y] & prefix:
                phase.append((y, x))
        logger.debug(f'阶段 {k + 1} (元素 {base.name(h)}): {len(phase)} 条语句')
        phases.append(phase)
    return phases


def compile_zeta_bjorklund(lattice: LatticeInfo, order: JirOrder) -> Slp:
    """
    快速 zeta 变换:阶段 1..n 依次执行,每条语句 g(y) += g(x)

    对任意格和任意排列都正确;半模格配合 order_by_height 时长度恰为 e
    """
    statements = [
        Statement(ADD, y, x)
        for phase in _bjorklund_phases(lattice, order)
        for y, x in phase
    ]
    program = Slp(lattice.size, statements, 'zeta')
    logger.info(f'zeta-bjorklund 编译完成: 长度 {program.length}, e={lattice.base.edge_count}')
    return program


def compile_mobius_bjorklund(lattice: LatticeInfo, order: JirOrder) -> Slp:
    """
    快速 Möbius 变换:阶段 n..1 逆序执行,阶段内 x 按编号降序,语句 f(y) -= f(x)

    同一阶段内的来源都不 ≥ i、目标都 ≥ i,语句两两可交换,
    所以结果恰为 zeta 程序的逆序且加法换成减法
    """
    statements = [
        Statement(SUB, y, x)
        for phase in reversed(_bjorklund_phases(lattice, order))
        for y, x in reversed(phase)
    ]
    program = Slp(lattice.size, statements, 'moebius')
    logger.info(f'mobius-bjorklund 编译完成: 长度 {program.length}, e={lattice.base.edge_count}')
    return program


def _edges_by_label(poset: Poset, labeling: EdgeLabeling) -> List[int]:
    labeling.check_against(poset)
    if not labeling.injective:
        seen = {}
        for k, label in enumerate(labeling.labels):
            if label in seen:
                raise LabelingError(
                    f'标号 {label} 被多条边共用,沿边算法要求单射标号', (seen[label], k)
                )
            seen[label] = k
    return sorted(range(poset.edge_count), key=lambda k: labeling.labels[k])


def compile_zeta_edges(poset: Poset, labeling: EdgeLabeling) -> Slp:
    """
    沿边相加:按标号升序,每条覆盖边 (x, y) 生成一条 g(y) += g(x)

    Raises:
        LabelingError: 标号不是单射
    """
    statements = [
        Statement(ADD, poset.covers[k][1], poset.covers[k][0])
        for k in _edges_by_label(poset, labeling)
    ]
    return Slp(poset.size, statements, 'zeta')


def compile_mobius_edges(poset: Poset, labeling: EdgeLabeling) -> Slp:
    """
    沿边相减:按标号降序,每条覆盖边 (x, y) 生成一条 f(y) -= f(x)

    Raises:
        LabelingError: 标号不是单射
    """
    statements = [
        Statement(SUB, poset.covers[k][1], poset.covers[k][0])
        for k in reversed(_edges_by_label(poset, labeling))
    ]
    return Slp(poset.size, statements, 'moebius')


def length_range_over_orders(lattice: LatticeInfo, max_n: int = 8) -> Tuple[int, int]:
    """
    穷举全部 n! 个排列,返回 zeta-bjorklund 程序长度的 (最小值, 最大值)

    Raises:
        ValueError: n 超过 max_n
    """
    if lattice.n > max_n:
        raise ValueError(f'n={lattice.n} 超过穷举上限 {max_n}')
    lengths = [
        sum(len(phase) for phase in _bjorklund_phases(lattice, JirOrder(lattice, perm)))
        for perm in itertools.permutations(lattice.join_irreducibles)
    ]
    return min(lengths), max(lengths)
