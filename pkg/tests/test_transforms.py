"""
变换编译测试
"""

import random

import pytest

from zetaslp.exceptions import LabelingError, OrderError
from zetaslp.models.labeling import EdgeLabeling
from zetaslp.models.lattice import JirOrder, is_semimodular, lattice_structure
from zetaslp.models.slp import parse_slp, serialize_slp
from zetaslp.services.generators import gen_chain, gen_diamond, gen_figure1
from zetaslp.services.labelings import make_injective, semimodular_labeling
from zetaslp.services.oracle import verify_slp
from zetaslp.services.transforms import (
    compile_mobius_bjorklund,
    compile_mobius_edges,
    compile_zeta_bjorklund,
    compile_zeta_edges,
    length_range_over_orders,
    make_order,
    order_by_height,
    order_by_id,
    order_reverse_height,
    random_order,
)


class TestOrders:
    """并不可约元排列策略"""

    def test_policies(self, figure1):
        _, lattice = figure1
        assert order_by_height(lattice).elements == (1, 2, 3, 4)
        assert order_by_id(lattice).elements == (1, 2, 3, 4)
        assert order_reverse_height(lattice).elements == (4, 3, 2, 1)

    def test_make_order(self, figure1):
        _, lattice = figure1
        assert make_order(lattice, 'reverse-height').elements == (4, 3, 2, 1)
        first = make_order(lattice, 'random:7').elements
        assert first == make_order(lattice, 'random:7').elements
        assert sorted(first) == [1, 2, 3, 4]

    def test_make_order_rejects(self, figure1):
        _, lattice = figure1
        with pytest.raises(OrderError, match='未知的排列策略'):
            make_order(lattice, 'sideways')
        with pytest.raises(OrderError, match='整数'):
            make_order(lattice, 'random:x')


class TestBjorklund:
    """基于并不可约元的快速变换"""

    def test_figure1_zeta_golden(self, figure1, golden):
        poset, lattice = figure1
        program = compile_zeta_bjorklund(lattice, order_by_height(lattice))
        assert serialize_slp(program) == golden('figure1_zeta.slp')
        assert verify_slp(poset, program, 'zeta').ok

    def test_figure1_mobius_golden(self, figure1, golden):
        poset, lattice = figure1
        program = compile_mobius_bjorklund(lattice, order_by_height(lattice))
        assert serialize_slp(program) == golden('figure2_mobius.slp')
        assert verify_slp(poset, program, 'moebius').ok

    def test_golden_files_parse(self, golden):
        zeta = parse_slp(golden('figure1_zeta.slp'))
        mobius = parse_slp(golden('figure2_mobius.slp'))
        assert mobius == zeta.reversed_inverse()

    def test_semimodular_lengths_equal_e(self, semimodular_lattices):
        for name, (poset, lattice) in semimodular_lattices.items():
            order = order_by_height(lattice)
            for program in (compile_zeta_bjorklund(lattice, order),
                            compile_mobius_bjorklund(lattice, order)):
                assert program.length == poset.edge_count, name
                assert program.lies_on_edges(poset), name
                assert len({(st.source, st.target) for st in program}) == poset.edge_count, name

    def test_any_order_is_correct(self, lattices):
        rng = random.Random(5)
        for name, (poset, lattice) in lattices.items():
            for _ in range(5):
                order = random_order(lattice, rng)
                for program, kind in ((compile_zeta_bjorklund(lattice, order), 'zeta'),
                                      (compile_mobius_bjorklund(lattice, order), 'moebius')):
                    assert verify_slp(poset, program, kind).ok, name
                    assert poset.edge_count <= program.length <= lattice.size * lattice.n, name

    def test_chain_order_contrast(self):
        small = lattice_structure(gen_chain(4))
        assert compile_zeta_bjorklund(small, order_reverse_height(small)).length == 6

        lattice = lattice_structure(gen_chain(16))
        assert compile_zeta_bjorklund(lattice, order_by_height(lattice)).length == 15
        top_down = compile_zeta_bjorklund(lattice, order_reverse_height(lattice))
        assert top_down.length == 120
        assert verify_slp(lattice.base, top_down, 'zeta').ok

    def test_dual_of_figure1_depends_on_order(self):
        dual = gen_figure1().dual()
        lattice = lattice_structure(dual)
        assert lattice.join_irreducibles == (3, 4, 5)
        assert compile_zeta_bjorklund(lattice, order_by_height(lattice)).length == 11
        assert compile_zeta_bjorklund(lattice, JirOrder(lattice, (5, 3, 4))).length == 9
        assert length_range_over_orders(lattice) == (9, 11)

    def test_length_range_guard(self, lattices):
        _, lattice = lattices['boolean-3']
        assert length_range_over_orders(lattice) == (12, 12)
        with pytest.raises(ValueError, match='穷举上限'):
            length_range_over_orders(lattice, max_n=2)

    def test_single_element(self):
        lattice = lattice_structure(gen_chain(1))
        assert compile_zeta_bjorklund(lattice, order_by_height(lattice)).length == 0


class TestEdges:
    """沿边相加/相减"""

    def test_diamond(self):
        poset = gen_diamond()
        program = compile_zeta_edges(poset, EdgeLabeling([1, 3, 4, 2]))
        assert [str(st) for st in program] == ['add 1 0', 'add 3 2', 'add 2 0', 'add 3 1']
        assert verify_slp(poset, program, 'zeta').ok

        left = compile_zeta_edges(poset, EdgeLabeling([1, 2, 3, 4]))
        assert verify_slp(poset, left, 'zeta').witness == (0, 3, 2, 1)

    def test_mobius_edges_is_reverse(self, semimodular_lattices):
        for name, (poset, lattice) in semimodular_lattices.items():
            if poset.size > 64:
                continue
            labeling = make_injective(poset, semimodular_labeling(lattice, order_by_height(lattice)))
            zeta = compile_zeta_edges(poset, labeling)
            mobius = compile_mobius_edges(poset, labeling)
            assert mobius == zeta.reversed_inverse()
            assert verify_slp(poset, zeta, 'zeta').ok, name
            assert verify_slp(poset, mobius, 'moebius').ok, name

    def test_rejects_repeated_labels(self):
        with pytest.raises(LabelingError, match='单射') as info:
            compile_zeta_edges(gen_diamond(), EdgeLabeling([1, 2, 2, 1]))
        assert info.value.witness == (1, 2)

    def test_non_semimodular_lattices_exist_in_corpus(self, lattices):
        assert not is_semimodular(lattices['pentagon'][1])
