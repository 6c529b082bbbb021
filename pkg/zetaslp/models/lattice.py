"""
格结构模块
负责判定偏序集是否为格,构造并/交运算表,以及原子、半模、几何等结构谓词
"""

import logging
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from zetaslp.exceptions import NotALatticeError, OrderError
from zetaslp.models.poset import Poset, iter_bits

logger = logging.getLogger(__name__)


class LatticeInfo:
    """
    格的附加结构

    包含最小元 bottom、最大元 top、并表 join_table、交表 meet_table,
    以及按编号升序排列的并不可约元 join_irreducibles(恰好覆盖一个元素的元素)。
    只能通过 lattice_structure() 构造。
    """

    def __init__(self, base: Poset, join_table, meet_table):
        self.base = base
        self.join_table: Tuple[Tuple[int, ...], ...] = join_table
        self.meet_table: Tuple[Tuple[int, ...], ...] = meet_table
        self.bottom = base.minimal_elements()[0]
        self.top = base.maximal_elements()[0]
        self.join_irreducibles: Tuple[int, ...] = tuple(
            x for x in range(base.size) if len(base.lower_covers(x)) == 1
        )
        self.heights = base.heights

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def n(self) -> int:
        """并不可约元个数"""
        return len(self.join_irreducibles)

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def atoms(self) -> Tuple[int, ...]:
        return self.base.upper_covers(self.bottom)

    def __repr__(self) -> str:
        return f'LatticeInfo(v={self.size}, n={self.n}, e={self.base.edge_count})'


def _bound_table(poset: Poset, upward: bool) -> Tuple[Tuple[int, ...], ...]:
    """
    计算上确界(upward=True)或下确界表

    在线性扩张的位置坐标下,公共上界集合若有最小元,它必然是位置最小的那个;
    取出候选后再检查它是否位于全部公共上界之下。
    """
    v = poset.size
    extension = poset.linear_extension()
    position = [0] * v
    for pos, x in enumerate(extension):
        position[x] = pos

    def to_positions(mask: int) -> int:
        bits = 0
        for x in iter_bits(mask):
            bits |= 1 << position[x]
        return bits

    if upward:
        cones = [to_positions(poset.up_set(x)) for x in range(v)]
    else:
        cones = [to_positions(poset.down_set(x)) for x in range(v)]

    table = [[0] * v for _ in range(v)]
    for x in range(v):
        table[x][x] = x
        for y in range(x + 1, v):
            common = cones[x] & cones[y]
            if not common:
                kind = '上界' if upward else '下界'
                raise NotALatticeError(
                    f'{poset.name(x)} 与 {poset.name(y)} 没有公共{kind}', (x, y)
                )
            if upward:
                candidate = extension[(common & -common).bit_length() - 1]
            else:
                candidate = extension[common.bit_length() - 1]
            if common & ~cones[candidate]:
                kind = '上确界' if upward else '下确界'
                raise NotALatticeError(
                    f'{poset.name(x)} 与 {poset.name(y)} 没有唯一的{kind}', (x, y)
                )
            table[x][y] = table[y][x] = candidate
    return tuple(tuple(row) for row in table)


def lattice_structure(poset: Poset) -> LatticeInfo:
    """
    判定偏序集是否为格并构造并/交运算表

    Args:
        poset: 偏序集

    Returns:
        LatticeInfo 对象

    Raises:
        NotALatticeError: 空偏序集,或某一对元素没有唯一的上确界/下确界
    """
    if poset.size == 0:
        raise NotALatticeError('空偏序集没有最小元')
    join_table = _bound_table(poset, upward=True)
    meet_table = _bound_table(poset, upward=False)
    info = LatticeInfo(poset, join_table, meet_table)
    logger.debug(f'格结构构造完成: {info!r}')
    return info


def is_atomic(lattice: LatticeInfo) -> bool:
    """每个元素都等于其下方原子的并(空并为最小元)"""
    atoms = lattice.atoms()
    for x in range(lattice.size):
        acc = lattice.bottom
        for a in atoms:
            if lattice.base.leq(a, x):
                acc = lattice.join(acc, a)
        if acc != x:
            return False
    return True


def is_semimodular(lattice: LatticeInfo) -> bool:
    """(上)半模: x 覆盖 x∧y 蕴含 x∨y 覆盖 y"""
    base = lattice.base
    v = lattice.size
    for x in range(v):
        for y in range(v):
            if base.is_cover(lattice.meet(x, y), x) and not base.is_cover(y, lattice.join(x, y)):
                return False
    return True


def is_lower_semimodular(lattice: LatticeInfo) -> bool:
    """下半模: x∨y 覆盖 x 蕴含 y 覆盖 x∧y"""
    base = lattice.base
    v = lattice.size
    for x in range(v):
        for y in range(v):
            if base.is_cover(x, lattice.join(x, y)) and not base.is_cover(lattice.meet(x, y), y):
                return False
    return True


def is_geometric(lattice: LatticeInfo) -> bool:
    return is_atomic(lattice) and is_semimodular(lattice)


def satisfies_cover_condition(lattice: LatticeInfo) -> bool:
    """
    条件 x ∨ i ⋗ x 对所有 x 与所有不在 x 之下的并不可约元 i 成立

    在有限格上等价于几何格
    """
    base = lattice.base
    for x in range(lattice.size):
        for i in lattice.join_irreducibles:
            if not base.leq(i, x) and not base.is_cover(x, lattice.join(x, i)):
                return False
    return True


def complexity_parameters(lattice: LatticeInfo) -> Tuple[int, int, int]:
    """返回 (v, n, e)"""
    return lattice.size, lattice.n, lattice.base.edge_count


def within_edge_bounds(lattice: LatticeInfo) -> bool:
    """格上恒有 v-1 ≤ e ≤ v·n"""
    v, n, e = complexity_parameters(lattice)
    return v - 1 <= e <= v * n


class JirOrder:
    """
    并不可约元的命名:第 k 个位置(从 0 开始)上的元素名为 k+1
    """

    def __init__(self, lattice: LatticeInfo, elements: Sequence[int]):
        """
        Args:
            lattice: 所属的格
            elements: 并不可约元的一个排列

        Raises:
            OrderError: elements 不是 I 的排列
        """
        self.elements: Tuple[int, ...] = tuple(elements)
        if len(set(self.elements)) != len(self.elements) or \
                set(self.elements) != set(lattice.join_irreducibles):
            raise OrderError('排列必须恰好包含全部并不可约元各一次')
        self._names = {x: k + 1 for k, x in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def element(self, name: int) -> int:
        """名称 1..n 对应的元素编号"""
        return self.elements[name - 1]

    def name_of(self, element: int) -> int:
        return self._names[element]

    def __repr__(self) -> str:
        return f'JirOrder{self.elements}'


def spectrum_masks(lattice: LatticeInfo, order: JirOrder) -> List[int]:
    """每个元素的谱集合,以位集表示:名称 k 对应第 k-1 位"""
    masks = [0] * lattice.size
    for k, h in enumerate(order.elements):
        for x in iter_bits(lattice.base.up_set(h)):
            masks[x] |= 1 << k
    return masks


def spectrum(lattice: LatticeInfo, order: JirOrder, x: int) -> FrozenSet[int]:
    """φ(x): 位于 x 之下的并不可约元名称集合"""
    base = lattice.base
    return frozenset(k + 1 for k, h in enumerate(order.elements) if base.leq(h, x))


def prefix_spectrum(lattice: LatticeInfo, order: JirOrder, i: int, x: int) -> FrozenSet[int]:
    """
    φ_i(x) = φ(x) ∩ {1..i},φ_0(x) 为空集

    Raises:
        ValueError: i 不在 0..n 之内
    """
    if not 0 <= i <= len(order):
        raise ValueError(f'前缀长度 {i} 超出范围 0..{len(order)}')
    return frozenset(k for k in spectrum(lattice, order, x) if k <= i)
