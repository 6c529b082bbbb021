"""
共享夹具: 格的测试语料、半模子集与固定种子的随机数发生器
"""

import os
import random

import pytest

from zetaslp.models.lattice import is_semimodular, lattice_structure
from zetaslp.services.generators import (
    gen_boolean,
    gen_chain,
    gen_diamond,
    gen_divisor,
    gen_figure1,
    gen_hexagon,
    gen_parallel_chains,
    gen_partition,
    gen_pentagon,
)

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')


def build_corpus():
    corpus = {}
    for v in range(2, 65):
        corpus[f'chain-{v}'] = gen_chain(v)
    for n in range(0, 9):
        corpus[f'boolean-{n}'] = gen_boolean(n)
    for number in (12, 30, 360, 1024):
        corpus[f'divisor-{number}'] = gen_divisor(number)
    for m in (3, 4, 5):
        corpus[f'partition-{m}'] = gen_partition(m)
    for k in (1, 2, 3):
        corpus[f'parallel-chains-{k}'] = gen_parallel_chains(k)
    corpus['figure1'] = gen_figure1()
    corpus['diamond'] = gen_diamond()
    corpus['pentagon'] = gen_pentagon()
    corpus['hexagon'] = gen_hexagon()
    return corpus


@pytest.fixture(scope='session')
def corpus():
    """名称 -> Poset"""
    return build_corpus()


@pytest.fixture(scope='session')
def lattices(corpus):
    """名称 -> (Poset, LatticeInfo)"""
    return {name: (poset, lattice_structure(poset)) for name, poset in corpus.items()}


@pytest.fixture(scope='session')
def semimodular_lattices(lattices):
    return {
        name: (poset, lattice)
        for name, (poset, lattice) in lattices.items()
        if is_semimodular(lattice)
    }


@pytest.fixture(scope='session')
def small_lattices(lattices):
    """元素个数不超过 64 的语料,供需要反复构造稠密矩阵的测试使用"""
    return {name: pair for name, pair in lattices.items() if pair[0].size <= 64}


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def figure1():
    poset = gen_figure1()
    return poset, lattice_structure(poset)


@pytest.fixture
def golden():
    """按文件名读取 golden 目录下的文件"""
    def read(name):
        with open(os.path.join(GOLDEN_DIR, name), 'r', encoding='utf-8') as f:
            return f.read()

    return read
