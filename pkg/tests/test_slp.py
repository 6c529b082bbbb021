"""
直线程序模型测试
"""

import pytest

from zetaslp.exceptions import SlpFormatError
from zetaslp.models.slp import ADD, SUB, Slp, Statement, evaluate, parse_slp, serialize_slp, slp_to_matrix
from zetaslp.services.generators import gen_diamond


def diamond_zeta():
    return Slp(4, [
        Statement(ADD, 1, 0),
        Statement(ADD, 3, 2),
        Statement(ADD, 2, 0),
        Statement(ADD, 3, 1),
    ], 'zeta')


class TestSlp:
    """执行与展开"""

    def test_evaluate(self):
        assert evaluate(diamond_zeta(), [1, 10, 100, 1000]) == [1, 11, 101, 1111]

    def test_evaluate_does_not_mutate_input(self):
        vector = [1, 2, 3, 4]
        diamond_zeta().evaluate(vector)
        assert vector == [1, 2, 3, 4]

    def test_width_mismatch(self):
        with pytest.raises(ValueError, match='宽度'):
            diamond_zeta().evaluate([1, 2])

    def test_rejects_non_integer_input(self):
        with pytest.raises(ValueError, match='不是整数'):
            diamond_zeta().evaluate([1, 2.5, 3, 4])
        with pytest.raises(ValueError, match='不是整数'):
            diamond_zeta().to_matrix().apply([1, 2, 3.0, 4])

    def test_linearity(self, rng):
        program = diamond_zeta().compose(Slp(4, [Statement(SUB, 0, 3), Statement(ADD, 2, 1)]))
        for _ in range(50):
            x = [rng.randint(-100, 100) for _ in range(4)]
            y = [rng.randint(-100, 100) for _ in range(4)]
            c = rng.randint(-9, 9)
            summed = program.evaluate([a + b for a, b in zip(x, y)])
            assert summed == [a + b for a, b in zip(program.evaluate(x), program.evaluate(y))]
            assert program.evaluate([c * a for a in x]) == [c * a for a in program.evaluate(x)]

    def test_empty_program(self):
        program = Slp(3)
        assert program.length == 0
        assert program.evaluate([4, 5, 6]) == [4, 5, 6]
        assert program.to_matrix().is_identity()

    def test_to_matrix(self):
        matrix = slp_to_matrix(diamond_zeta())
        assert matrix.kind == 'zeta'
        assert matrix.to_lists() == [
            [1, 1, 1, 1],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
            [0, 0, 0, 1],
        ]

    def test_matrix_agrees_with_evaluate(self):
        program = Slp(3, [Statement(ADD, 1, 0), Statement(SUB, 0, 2), Statement(ADD, 2, 1)])
        vector = [3, -7, 11]
        assert program.to_matrix().apply(vector) == program.evaluate(vector)

    def test_inverse_composes_to_identity(self):
        program = diamond_zeta()
        inverse = program.reversed_inverse()
        assert inverse.kind == 'moebius'
        assert [st.op for st in inverse] == [SUB] * 4
        assert program.compose(inverse).to_matrix().is_identity()
        assert inverse.compose(program).evaluate([5, -3, 8, 2]) == [5, -3, 8, 2]

    def test_compose_width_mismatch(self):
        with pytest.raises(ValueError):
            diamond_zeta().compose(Slp(3))

    def test_lies_on_edges(self):
        poset = gen_diamond()
        assert diamond_zeta().lies_on_edges(poset)
        assert not Slp(4, [Statement(ADD, 3, 0)]).lies_on_edges(poset)

    def test_invalid_statements(self):
        with pytest.raises(SlpFormatError, match='超出宽度'):
            Slp(2, [Statement(ADD, 2, 0)])
        with pytest.raises(SlpFormatError, match='目标与来源相同'):
            Slp(2, [Statement(ADD, 1, 1)])
        with pytest.raises(SlpFormatError, match='未知的程序类型'):
            Slp(2, kind='gamma')


class TestSlpFile:
    """文件格式"""

    def test_serialize(self):
        text = serialize_slp(diamond_zeta())
        assert text == 'slp v=4 kind=zeta\nadd 1 0\nadd 3 2\nadd 2 0\nadd 3 1\n'
        assert parse_slp(text) == diamond_zeta()

    def test_comments_and_default_kind(self):
        program = parse_slp('# made by hand\nslp v=2\n\nadd 1 0  # g1 += g0\n')
        assert program.kind == 'unknown'
        assert program.length == 1

    def test_missing_header(self):
        with pytest.raises(SlpFormatError, match='缺少 slp 文件头') as info:
            parse_slp('add 1 0\n')
        assert info.value.line == 1
        with pytest.raises(SlpFormatError, match='缺少 slp 文件头'):
            parse_slp('')

    def test_bad_statement(self):
        with pytest.raises(SlpFormatError, match='第 2 行'):
            parse_slp('slp v=2 kind=zeta\nmul 1 0\n')
        with pytest.raises(SlpFormatError, match='超出宽度'):
            parse_slp('slp v=2 kind=zeta\nadd 2 0\n')
        with pytest.raises(SlpFormatError, match='整数'):
            parse_slp('slp v=2 kind=zeta\nadd a 0\n')

    def test_bad_header(self):
        with pytest.raises(SlpFormatError, match='未知的程序类型'):
            parse_slp('slp v=2 kind=gamma\n')
        with pytest.raises(SlpFormatError, match='不是整数'):
            parse_slp('slp v=two\n')
        with pytest.raises(SlpFormatError, match='不能为负数') as info:
            parse_slp('slp v=-1 kind=zeta\n')
        assert info.value.line == 1
        with pytest.raises(SlpFormatError, match='不能为负数'):
            Slp(-2)
