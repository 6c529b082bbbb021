"""
偏序集模型
以 Hasse 图(覆盖关系)表示有限偏序集,构造时一次性推导出完整的序关系
"""

import heapq
import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from zetaslp.exceptions import PosetFormatError

logger = logging.getLogger(__name__)

Cover = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """按从低到高的顺序枚举位集中的元素编号"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """
    有限偏序集

    元素编号为 0..v-1,names[i] 是第 i 个元素的显示名称。
    covers 中的 (x, y) 表示 x ⋖ y。序关系按行存为位集:
    up_set(x) 的第 y 位为 1 当且仅当 x ≤ y。

    构造后不可变,可在多个线程间共享读取。
    """

    def __init__(self, names: Sequence[str], covers: Sequence[Cover]):
        """
        Args:
            names: 互不相同的元素名称,下标即元素编号
            covers: 覆盖边序列,必须构成传递约简

        Raises:
            PosetFormatError: 名称重复、编号越界、存在环或边可由传递得到
        """
        self._names = tuple(str(name) for name in names)
        if len(set(self._names)) != len(self._names):
            raise PosetFormatError('元素名称重复')

        v = len(self._names)
        self._covers = tuple((int(x), int(y)) for x, y in covers)

        upper: List[List[int]] = [[] for _ in range(v)]
        lower: List[List[int]] = [[] for _ in range(v)]
        seen = set()
        for x, y in self._covers:
            if not (0 <= x < v and 0 <= y < v):
                raise PosetFormatError(f'覆盖边 ({x}, {y}) 引用了不存在的元素')
            if x == y:
                raise PosetFormatError(f'检测到环: {self._names[x]} 覆盖自身')
            if (x, y) in seen:
                raise PosetFormatError(f'覆盖边 {self._names[x]} {self._names[y]} 重复')
            seen.add((x, y))
            upper[x].append(y)
            lower[y].append(x)

        self._upper = tuple(tuple(u) for u in upper)
        self._lower = tuple(tuple(d) for d in lower)
        self._cover_index: Dict[Cover, int] = {edge: k for k, edge in enumerate(self._covers)}

        order = self._topological_order()

        up = [0] * v
        for x in reversed(order):
            bits = 1 << x
            for y in upper[x]:
                bits |= up[y]
            up[x] = bits

        # 覆盖边 (x, y) 不得经由 x 的另一条上行边到达 y
        for x in range(v):
            for y in upper[x]:
                for z in upper[x]:
                    if z != y and (up[z] >> y) & 1:
                        raise PosetFormatError(
                            f'覆盖边 {self._names[x]} {self._names[y]} 可经由 '
                            f'{self._names[z]} 传递得到,输入不是 Hasse 图'
                        )

        down = [0] * v
        for x in range(v):
            for y in iter_bits(up[x]):
                down[y] |= 1 << x

        heights = [0] * v
        for y in order:
            if lower[y]:
                heights[y] = max(heights[x] for x in lower[y]) + 1

        self._up = tuple(up)
        self._down = tuple(down)
        self._heights = tuple(heights)
        self._linear_extension = tuple(sorted(range(v), key=lambda x: (heights[x], x)))
        self._index = {name: i for i, name in enumerate(self._names)}

    def _topological_order(self) -> List[int]:
        """Kahn 算法,同层按编号升序;存在环时报错"""
        v = len(self._names)
        indegree = [len(d) for d in self._lower]
        heap = [x for x in range(v) if indegree[x] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            x = heapq.heappop(heap)
            order.append(x)
            for y in self._upper[x]:
                indegree[y] -= 1
                if indegree[y] == 0:
                    heapq.heappush(heap, y)
        if len(order) != v:
            stuck = sorted(x for x in range(v) if indegree[x] > 0)
            raise PosetFormatError(f'检测到环,涉及元素 {self._names[stuck[0]]}')
        return order

    @property
    def size(self) -> int:
        """元素个数 v"""
        return len(self._names)

    @property
    def edge_count(self) -> int:
        """覆盖边条数 e"""
        return len(self._covers)

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    @property
    def covers(self) -> Tuple[Cover, ...]:
        return self._covers

    @property
    def heights(self) -> Tuple[int, ...]:
        """每个元素到某个极小元的最长链长度"""
        return self._heights

    def linear_extension(self) -> Tuple[int, ...]:
        """按 (高度, 编号) 排序的线性扩张"""
        return self._linear_extension

    def name(self, x: int) -> str:
        return self._names[x]

    def index_of(self, name: str) -> int:
        """
        Args:
            name: 元素名称

        Returns:
            元素编号

        Raises:
            KeyError: 名称不存在
        """
        return self._index[name]

    def upper_covers(self, x: int) -> Tuple[int, ...]:
        return self._upper[x]

    def lower_covers(self, y: int) -> Tuple[int, ...]:
        return self._lower[y]

    def up_set(self, x: int) -> int:
        """所有 y ≥ x 组成的位集"""
        return self._up[x]

    def down_set(self, y: int) -> int:
        """所有 x ≤ y 组成的位集"""
        return self._down[y]

    def leq(self, x: int, y: int) -> bool:
        return bool((self._up[x] >> y) & 1)

    def is_cover(self, x: int, y: int) -> bool:
        return (x, y) in self._cover_index

    def cover_index(self, x: int, y: int) -> int:
        """覆盖边 (x, y) 在 covers 中的下标"""
        return self._cover_index[(x, y)]

    def minimal_elements(self) -> List[int]:
        return [x for x in range(self.size) if not self._lower[x]]

    def maximal_elements(self) -> List[int]:
        return [x for x in range(self.size) if not self._upper[x]]

    def is_graded(self) -> bool:
        """所有极大链长度相同"""
        heights = self._heights
        if any(heights[y] != heights[x] + 1 for x, y in self._covers):
            return False
        return len({heights[x] for x in self.maximal_elements()}) <= 1

    def dual(self) -> 'Poset':
        """对偶偏序集:反转所有覆盖边,名称与编号不变"""
        return Poset(self._names, [(y, x) for x, y in self._covers])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._names == other._names and set(self._covers) == set(other._covers)

    def __hash__(self) -> int:
        return hash((self._names, frozenset(self._covers)))

    def __repr__(self) -> str:
        return f'Poset(v={self.size}, e={self.edge_count})'


def _content_tokens(line: str) -> List[str]:
    return line.split('#', 1)[0].split()


def parse_poset(text: str) -> Poset:
    """
    解析偏序集文件

    文件格式: `#` 开始注释; `elem NAME` 声明元素; `cover A B` 声明 A ⋖ B。
    元素编号按首次出现顺序分配。文件中没有任何 elem 行时,cover 行
    隐式引入元素;一旦出现 elem 行,cover 的端点必须先声明。

    Args:
        text: 文件内容

    Returns:
        Poset 对象

    Raises:
        PosetFormatError: 格式错误、名称重复、未知元素、环或传递边
    """
    lines = text.splitlines()
    strict = any(_content_tokens(line)[:1] == ['elem'] for line in lines)

    names: List[str] = []
    index: Dict[str, int] = {}
    covers: List[Cover] = []

    def intern(name: str, line_no: int) -> int:
        if name not in index:
            if strict:
                raise PosetFormatError(f'未知元素 {name}', line_no)
            index[name] = len(names)
            names.append(name)
        return index[name]

    for line_no, line in enumerate(lines, start=1):
        tokens = _content_tokens(line)
        if not tokens:
            continue
        keyword = tokens[0]
        if keyword == 'elem':
            if len(tokens) != 2:
                raise PosetFormatError('elem 行需要恰好一个名称', line_no)
            if tokens[1] in index:
                raise PosetFormatError(f'元素 {tokens[1]} 重复声明', line_no)
            index[tokens[1]] = len(names)
            names.append(tokens[1])
        elif keyword == 'cover':
            if len(tokens) != 3:
                raise PosetFormatError('cover 行需要恰好两个名称', line_no)
            x = intern(tokens[1], line_no)
            y = intern(tokens[2], line_no)
            covers.append((x, y))
        else:
            raise PosetFormatError(f'无法识别的指令 {keyword}', line_no)

    poset = Poset(names, covers)
    logger.debug(f'解析偏序集完成: v={poset.size}, e={poset.edge_count}')
    return poset


def serialize_poset(poset: Poset) -> str:
    """
    输出偏序集文件,先按编号列出全部元素,再按 covers 顺序列出覆盖边

    Args:
        poset: 偏序集

    Returns:
        文件内容,以换行结尾
    """
    lines = [f'# poset v={poset.size} e={poset.edge_count}']
    lines.extend(f'elem {name}' for name in poset.names)
    lines.extend(f'cover {poset.name(x)} {poset.name(y)}' for x, y in poset.covers)
    return '\n'.join(lines) + '\n'
