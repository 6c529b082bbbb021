"""
边标号模型
EdgeLabeling 与覆盖边序列按下标对齐;同时负责标号文件的读写
"""

from typing import Dict, Iterable, Optional, Tuple

from zetaslp.exceptions import LabelingError
from zetaslp.models.poset import Poset


class EdgeLabeling:
    """整数边标号,labels[k] 是 covers[k] 的标号,允许重复与负数"""

    def __init__(self, labels: Iterable[int]):
        self.labels: Tuple[int, ...] = tuple(int(label) for label in labels)

    @property
    def injective(self) -> bool:
        return len(set(self.labels)) == len(self.labels)

    def check_against(self, poset: Poset):
        """
        Raises:
            LabelingError: 标号个数与边数不一致
        """
        if len(self.labels) != poset.edge_count:
            raise LabelingError(
                f'标号个数 {len(self.labels)} 与边数 {poset.edge_count} 不一致'
            )

    def label_of(self, poset: Poset, x: int, y: int) -> int:
        return self.labels[poset.cover_index(x, y)]

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeLabeling):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f'EdgeLabeling{self.labels}'


class RisingChainReport:
    """
    上升链计数结果

    counts[(x, y)] 为 x ≤ y 时从 x 到 y 的上升链条数,超过 2 时记为 2。
    所有计数都恰为 1 时 is_u_labeling 为真,否则 witness 给出第一个失败的
    (x, y, count)。
    """

    def __init__(self, counts: Dict[Tuple[int, int], int]):
        self.counts = counts
        self.witness: Optional[Tuple[int, int, int]] = None
        for (x, y), count in sorted(counts.items()):
            if count != 1:
                self.witness = (x, y, count)
                break

    @property
    def is_u_labeling(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.is_u_labeling


def parse_labeling(text: str, poset: Poset) -> EdgeLabeling:
    """
    解析标号文件,每行 `label A B VALUE`,A B 必须是一条覆盖边

    Args:
        text: 文件内容
        poset: 标号所属的偏序集

    Returns:
        与 poset.covers 对齐的 EdgeLabeling

    Raises:
        LabelingError: 格式错误、未知元素、非覆盖边、重复或遗漏的边
    """
    labels: Dict[int, int] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if tokens[0] != 'label' or len(tokens) != 4:
            raise LabelingError(f'第 {line_no} 行: 应为 label A B VALUE')
        try:
            x = poset.index_of(tokens[1])
            y = poset.index_of(tokens[2])
        except KeyError as e:
            raise LabelingError(f'第 {line_no} 行: 未知元素 {e.args[0]}')
        if not poset.is_cover(x, y):
            raise LabelingError(f'第 {line_no} 行: {tokens[1]} {tokens[2]} 不是覆盖边', (x, y))
        try:
            value = int(tokens[3])
        except ValueError:
            raise LabelingError(f'第 {line_no} 行: 标号 {tokens[3]} 不是整数')
        k = poset.cover_index(x, y)
        if k in labels:
            raise LabelingError(f'第 {line_no} 行: 边 {tokens[1]} {tokens[2]} 重复标号', (x, y))
        labels[k] = value

    missing = [k for k in range(poset.edge_count) if k not in labels]
    if missing:
        x, y = poset.covers[missing[0]]
        raise LabelingError(f'边 {poset.name(x)} {poset.name(y)} 缺少标号', (x, y))
    return EdgeLabeling(labels[k] for k in range(poset.edge_count))


def serialize_labeling(labeling: EdgeLabeling, poset: Poset) -> str:
    """按 covers 顺序输出标号文件"""
    labeling.check_against(poset)
    lines = [
        f'label {poset.name(x)} {poset.name(y)} {label}'
        for (x, y), label in zip(poset.covers, labeling.labels)
    ]
    return '\n'.join(lines) + '\n' if lines else ''
