"""
边标号构造与检验服务
包括半模格的标准标号、对偶标号、单射化,以及基于上升链计数的 U-标号判定
"""

import logging
from typing import Dict, Iterator, Tuple

from zetaslp.exceptions import LabelingError
from zetaslp.models.labeling import EdgeLabeling, RisingChainReport
from zetaslp.models.lattice import JirOrder, LatticeInfo, is_semimodular
from zetaslp.models.poset import Poset

logger = logging.getLogger(__name__)

# 判定只需区分 0、1、≥2
COUNT_CAP = 2


def check_order_compatible(lattice: LatticeInfo, order: JirOrder):
    """
    检查命名与格序相容: h ≤ h′ 蕴含 name(h) ≤ name(h′)

    Raises:
        LabelingError: 存在反例,witness 为 (h, h′)
    """
    base = lattice.base
    for h in order:
        for h2 in order:
            if h != h2 and base.leq(h, h2) and order.name_of(h) > order.name_of(h2):
                raise LabelingError(
                    f'并不可约元 {base.name(h)} ≤ {base.name(h2)},但命名顺序相反', (h, h2)
                )


def semimodular_labeling(lattice: LatticeInfo, order: JirOrder) -> EdgeLabeling:
    """
    半模格上的标号 λ(s,t) = min{i : s ∨ i = t}

    Args:
        lattice: 半模格
        order: 与格序相容的并不可约元命名

    Returns:
        与 covers 对齐的 EdgeLabeling

    Raises:
        LabelingError: 格不是半模的,或命名与格序不相容
    """
    if not is_semimodular(lattice):
        raise LabelingError('格不是半模的,无法构造半模标号')
    check_order_compatible(lattice, order)

    labels = []
    for s, t in lattice.base.covers:
        for name, h in enumerate(order, start=1):
            if lattice.join(s, h) == t:
                labels.append(name)
                break
        else:
            raise LabelingError(f'边 ({s}, {t}) 找不到满足 s ∨ i = t 的并不可约元', (s, t))
    return EdgeLabeling(labels)


def dual_labeling(labeling: EdgeLabeling, poset: Poset) -> EdgeLabeling:
    """
    对偶偏序集上的标号 λ*(s,t) = −λ(t,s)

    dual() 保持覆盖边的下标,因此只需逐项取负
    """
    labeling.check_against(poset)
    return EdgeLabeling(-label for label in labeling.labels)


def _rising_counts_from(poset: Poset, labels: Tuple[int, ...], x: int) -> Dict[int, int]:
    """
    统计从 x 出发到每个 z ≥ x 的上升链条数(截断到 COUNT_CAP)

    edge_counts[k] 记录以第 k 条边结尾的上升链条数;沿线性扩张递推,
    进入 z 的边 (w, z) 可以接在任何标号不超过它的进入 w 的边后面。
    """
    up = poset.up_set(x)
    edge_counts: Dict[int, int] = {}
    totals = {x: 1}
    for z in poset.linear_extension():
        if z == x or not (up >> z) & 1:
            continue
        total = 0
        for w in poset.lower_covers(z):
            if not (up >> w) & 1:
                continue
            k = poset.cover_index(w, z)
            label = labels[k]
            count = 1 if w == x else 0
            for u in poset.lower_covers(w):
                j = poset.cover_index(u, w)
                if j in edge_counts and labels[j] <= label:
                    count += edge_counts[j]
            edge_counts[k] = min(count, COUNT_CAP)
            total += edge_counts[k]
        totals[z] = min(total, COUNT_CAP)
    return totals


def is_u_labeling(poset: Poset, labeling: EdgeLabeling) -> RisingChainReport:
    """
    对每一对 x ≤ y 统计上升链条数,判定是否为 U-标号

    Args:
        poset: 任意偏序集
        labeling: 边标号,可以不是单射

    Returns:
        RisingChainReport
    """
    labeling.check_against(poset)
    counts: Dict[Tuple[int, int], int] = {}
    for x in range(poset.size):
        for z, count in _rising_counts_from(poset, labeling.labels, x).items():
            counts[(x, z)] = count
    report = RisingChainReport(counts)
    if report.witness:
        x, y, count = report.witness
        logger.info(f'不是 U-标号: {poset.name(x)} 到 {poset.name(y)} 有 {count} 条上升链')
    return report


def iter_rising_chains(poset: Poset, labeling: EdgeLabeling, x: int, y: int) -> Iterator[Tuple[int, ...]]:
    """逐条枚举从 x 到 y 的上升链,链以元素编号元组表示"""
    labeling.check_against(poset)
    below_y = poset.down_set(y)
    if not (below_y >> x) & 1:
        return

    def extend(chain: Tuple[int, ...], last_label):
        tip = chain[-1]
        if tip == y:
            yield chain
            return
        for z in poset.upper_covers(tip):
            if not (below_y >> z) & 1:
                continue
            label = labeling.label_of(poset, tip, z)
            if last_label is None or last_label <= label:
                yield from extend(chain + (z,), label)

    yield from extend((x,), None)


def make_injective(poset: Poset, labeling: EdgeLabeling) -> EdgeLabeling:
    """
    按 (旧标号, 起点在线性扩张中的位置, 边下标) 排序,依次赋予 1..e

    若原标号是 U-标号,结果是具有相同上升链的单射 U-标号
    """
    labeling.check_against(poset)
    position = {x: pos for pos, x in enumerate(poset.linear_extension())}
    ranking = sorted(
        range(poset.edge_count),
        key=lambda k: (labeling.labels[k], position[poset.covers[k][0]], k),
    )
    labels = [0] * poset.edge_count
    for rank, k in enumerate(ranking, start=1):
        labels[k] = rank
    return EdgeLabeling(labels)


def pentagon_u_labeling() -> EdgeLabeling:
    """五边形上的 U-标号 pq=1, qr=2, rs=3, ts=4, pt=5,与 gen_pentagon 的边顺序对齐"""
    # covers: pq, qr, rs, pt, ts
    return EdgeLabeling([1, 2, 3, 5, 4])
