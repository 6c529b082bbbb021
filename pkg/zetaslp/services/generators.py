"""
格族生成器
构造示例格、半模族与难例中用到的各类格,输出的覆盖边都已是传递约简
"""

import itertools
import logging
from typing import Callable, Dict, Iterator, List, NamedTuple, Tuple

from zetaslp.exceptions import NotALatticeError, SizeGuardError
from zetaslp.models.lattice import lattice_structure
from zetaslp.models.poset import Poset

logger = logging.getLogger(__name__)

BOOLEAN_MAX_N = 20
PARTITION_MAX_M = 7


def gen_chain(v: int) -> Poset:
    """v 元链 0 < 1 < … < v-1"""
    if v < 1:
        raise ValueError('链至少包含一个元素')
    return Poset([str(i) for i in range(v)], [(i, i + 1) for i in range(v - 1)])


def gen_boolean(n: int, max_n: int = BOOLEAN_MAX_N) -> Poset:
    """
    n 元集合的子集格,元素编号即特征位掩码,名称为 n 位二进制串

    Args:
        n: 基集合大小
        max_n: 规模上限

    Raises:
        SizeGuardError: n 超过上限
    """
    if n < 0:
        raise ValueError('n 不能为负数')
    if n > max_n:
        raise SizeGuardError(f'子集格的 n={n} 超过上限 {max_n}')
    width = max(n, 1)
    names = [format(mask, f'0{width}b') for mask in range(1 << n)]
    covers = [
        (mask, mask | (1 << bit))
        for mask in range(1 << n)
        for bit in range(n)
        if not mask & (1 << bit)
    ]
    return Poset(names, covers)


def _prime_factors(number: int) -> List[int]:
    primes = []
    p = 2
    while p * p <= number:
        if number % p == 0:
            primes.append(p)
            while number % p == 0:
                number //= p
        p += 1
    if number > 1:
        primes.append(number)
    return primes


def gen_divisor(number: int) -> Poset:
    """number 的正因子按整除排序,商为素数的因子对构成覆盖边"""
    if number < 1:
        raise ValueError('N 必须是正整数')
    divisors = [d for d in range(1, number + 1) if number % d == 0]
    index = {d: i for i, d in enumerate(divisors)}
    primes = _prime_factors(number)
    covers = [
        (index[d], index[d * p])
        for d in divisors
        for p in primes
        if (number // d) % p == 0
    ]
    return Poset([str(d) for d in divisors], covers)


def _set_partitions(m: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """以受限增长串枚举 {1..m} 的全部划分,块按最小元排序"""
    def grow(prefix: List[int], blocks: int):
        if len(prefix) == m:
            parts = [[] for _ in range(blocks)]
            for element, block in enumerate(prefix, start=1):
                parts[block].append(element)
            yield tuple(tuple(part) for part in parts)
            return
        for block in range(blocks + 1):
            prefix.append(block)
            yield from grow(prefix, max(blocks, block + 1))
            prefix.pop()

    yield from grow([], 0)


def _partition_name(partition) -> str:
    return '|'.join(''.join(str(element) for element in block) for block in partition)


def gen_partition(m: int, max_m: int = PARTITION_MAX_M) -> Poset:
    """
    {1..m} 的划分格,细划分在下、粗划分在上,最小元为全单点划分

    覆盖关系即合并恰好两个块。

    Raises:
        SizeGuardError: m 超过上限
    """
    if m < 1:
        raise ValueError('m 至少为 1')
    if m > max_m:
        raise SizeGuardError(f'划分格的 m={m} 超过上限 {max_m}')
    partitions = sorted(_set_partitions(m), key=lambda p: (-len(p), _partition_name(p)))
    index = {p: i for i, p in enumerate(partitions)}
    covers = []
    for p in partitions:
        for a, b in itertools.combinations(range(len(p)), 2):
            merged = tuple(sorted(
                [blk for k, blk in enumerate(p) if k not in (a, b)] + [tuple(sorted(p[a] + p[b]))]
            ))
            covers.append((index[p], index[merged]))
    return Poset([_partition_name(p) for p in partitions], covers)


def gen_pentagon() -> Poset:
    """五边形格 N5"""
    names = ['p', 'q', 'r', 's', 't']
    p, q, r, s, t = range(5)
    return Poset(names, [(p, q), (q, r), (r, s), (p, t), (t, s)])


def gen_hexagon() -> Poset:
    """六边形格:两条长度为 3 的链共享最小元与最大元"""
    names = ['p', 'q', 'r', 's', 't', 'u']
    p, q, r, s, t, u = range(6)
    return Poset(names, [(p, q), (q, r), (r, s), (p, t), (t, u), (u, s)])


def gen_diamond() -> Poset:
    """四元菱形 a < b, a < c, b < d, c < d"""
    names = ['a', 'b', 'c', 'd']
    a, b, c, d = range(4)
    return Poset(names, [(a, b), (a, c), (b, d), (c, d)])


def gen_parallel_chains(k: int) -> Poset:
    """
    k 条各含 k 个元素的平行链,加上公共最小元与最大元

    v = k²+2, e = k(k+1)
    """
    if k < 1:
        raise ValueError('k 至少为 1')
    names = ['bot']
    covers = []
    top = k * k + 1
    for chain in range(k):
        first = len(names)
        for level in range(k):
            names.append(f'c{chain + 1}.{level + 1}')
        covers.append((0, first))
        covers.extend((first + level, first + level + 1) for level in range(k - 1))
        covers.append((first + k - 1, top))
    names.append('top')
    return Poset(names, covers)


def gen_figure1() -> Poset:
    """快速 zeta 变换示例中的 7 元素、9 条边的半模格"""
    covers = [(0, 1), (0, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6)]
    return Poset([str(i) for i in range(7)], covers)


def _partial_orders(k: int) -> Iterator[List[Tuple[int, int]]]:
    """
    枚举 k 个带标号元素上的全部严格偏序,以 (a, b) 表示 a < b 的关系列表
    """
    pairs = list(itertools.combinations(range(k), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        less = set()
        for (a, b), state in zip(pairs, states):
            if state == 1:
                less.add((a, b))
            elif state == 2:
                less.add((b, a))
        if all((a, c) in less for a, b in less for b2, c in less if b == b2):
            yield sorted(less)


def iter_small_lattices(max_size: int) -> Iterator[Poset]:
    """
    枚举元素个数不超过 max_size 的全部(带标号)格

    任何至少两个元素的有限格都由中间部分的某个偏序再添加最小元与最大元得到,
    因此对中间部分的全部偏序逐一检验即可穷尽。

    Args:
        max_size: 元素个数上限

    Yields:
        通过 lattice_structure 检验的 Poset
    """
    if max_size >= 1:
        yield Poset(['0'], [])
    for k in range(0, max_size - 1):
        for less in _partial_orders(k):
            covers = [
                (a + 1, b + 1) for a, b in less
                if not any((a, c) in less and (c, b) in less for c in range(k))
            ]
            has_lower = {b for _, b in less}
            has_upper = {a for a, _ in less}
            top = k + 1
            covers.extend((0, x + 1) for x in range(k) if x not in has_lower)
            covers.extend((x + 1, top) for x in range(k) if x not in has_upper)
            if k == 0:
                covers.append((0, top))
            names = ['bot'] + [f'm{x}' for x in range(k)] + ['top']
            poset = Poset(names, covers)
            try:
                lattice_structure(poset)
            except NotALatticeError:
                continue
            yield poset


class Family(NamedTuple):
    """生成器登记项:arity 为所需整数参数个数"""

    build: Callable[..., Poset]
    arity: int


FAMILIES: Dict[str, Family] = {
    'chain': Family(gen_chain, 1),
    'boolean': Family(gen_boolean, 1),
    'divisor': Family(gen_divisor, 1),
    'partition': Family(gen_partition, 1),
    'pentagon': Family(gen_pentagon, 0),
    'hexagon': Family(gen_hexagon, 0),
    'diamond': Family(gen_diamond, 0),
    'parallel-chains': Family(gen_parallel_chains, 1),
    'figure1': Family(gen_figure1, 0),
}


def generate(family: str, params: List[int], limits: Dict = None) -> Poset:
    """
    按名称调用生成器

    Args:
        family: 格族名称
        params: 整数参数
        limits: 配置中的 limits 段,用于规模上限

    Raises:
        KeyError: 未知格族
        ValueError: 参数个数或取值不合法
        SizeGuardError: 超过规模上限
    """
    if family not in FAMILIES:
        raise KeyError(family)
    entry = FAMILIES[family]
    if len(params) != entry.arity:
        raise ValueError(f'{family} 需要 {entry.arity} 个参数,实际给出 {len(params)} 个')
    limits = limits or {}
    if family == 'boolean':
        return gen_boolean(params[0], max_n=limits.get('boolean_max_n', BOOLEAN_MAX_N))
    if family == 'partition':
        return gen_partition(params[0], max_m=limits.get('partition_max_m', PARTITION_MAX_M))
    logger.debug(f'生成 {family} {params}')
    return entry.build(*params)
