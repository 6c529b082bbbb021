"""
精确整数矩阵
元素使用 numpy object 数组保存 Python 整数,避免溢出
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

KINDS = ('zeta', 'moebius', 'unknown')


def as_int(value) -> int:
    """接受 int 与 numpy 整数,拒绝浮点数等会被截断的值"""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f'输入元素 {value!r} 不是整数')
    return int(value)


def identity_entries(v: int) -> np.ndarray:
    entries = np.zeros((v, v), dtype=object)
    np.fill_diagonal(entries, 1)
    return entries


class TransformMatrix:
    """
    v×v 精确整数矩阵,kind 为 zeta、moebius 或 unknown

    变换按行向量约定:g = f·M
    """

    def __init__(self, entries, kind: str = 'unknown'):
        entries = np.array(entries, dtype=object)
        if entries.size == 0:
            entries = np.zeros((0, 0), dtype=object)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f'矩阵必须是方阵,实际形状 {entries.shape}')
        if kind not in KINDS:
            raise ValueError(f'未知的矩阵类型 {kind}')
        self.entries = entries
        self.kind = kind

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def entry(self, x: int, y: int) -> int:
        return int(self.entries[x, y])

    def apply(self, vector: Sequence[int]) -> List[int]:
        """
        行向量乘矩阵

        Raises:
            ValueError: 向量长度与矩阵阶数不一致,或含有非整数元素
        """
        if len(vector) != self.size:
            raise ValueError(f'向量长度 {len(vector)} 与矩阵阶数 {self.size} 不一致')
        if self.size == 0:
            return []
        row = np.array([as_int(value) for value in vector], dtype=object)
        return [int(value) for value in row.dot(self.entries)]

    def __matmul__(self, other: 'TransformMatrix') -> 'TransformMatrix':
        if self.size == 0:
            return TransformMatrix(self.entries)
        return TransformMatrix(self.entries.dot(other.entries))

    def is_identity(self) -> bool:
        return np.array_equal(self.entries, identity_entries(self.size))

    def is_unit_upper_triangular(self, order: Sequence[int]) -> bool:
        """按给定元素顺序重排后是否为对角线全 1 的上三角矩阵"""
        for a, x in enumerate(order):
            if self.entries[x, x] != 1:
                return False
            for y in order[:a]:
                if self.entries[x, y] != 0:
                    return False
        return True

    def first_difference(self, other: 'TransformMatrix') -> Optional[Tuple[int, int, int, int]]:
        """
        按行优先顺序找到第一个不相等的元素

        Returns:
            (x, y, 本矩阵的值, other 的值),完全相等时返回 None
        """
        if self.size != other.size:
            raise ValueError(f'矩阵阶数不一致: {self.size} != {other.size}')
        diff = np.argwhere(self.entries != other.entries)
        if len(diff) == 0:
            return None
        x, y = (int(k) for k in diff[0])
        return x, y, self.entry(x, y), other.entry(x, y)

    def to_lists(self) -> List[List[int]]:
        return [[int(value) for value in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransformMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and \
            np.array_equal(self.entries, other.entries)

    def __repr__(self) -> str:
        return f'TransformMatrix(kind={self.kind}, v={self.size})'
