"""
直线程序模型
程序由按顺序执行的成对加减语句组成,初始化(输出复制输入)是隐式的,不计入长度
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence

from zetaslp.exceptions import SlpFormatError
from zetaslp.models.matrix import KINDS, TransformMatrix, as_int, identity_entries
from zetaslp.models.poset import Poset

logger = logging.getLogger(__name__)

ADD = 'add'
SUB = 'sub'


@dataclass(frozen=True)
class Statement:
    """out[target] ← out[target] ± out[source]"""

    op: str
    target: int
    source: int

    def __str__(self) -> str:
        return f'{self.op} {self.target} {self.source}'


class Slp:
    """
    宽度为 v 的直线程序

    Attributes:
        v: 向量宽度
        statements: 语句元组
        kind: 声明的变换类型 zeta / moebius / unknown
    """

    def __init__(self, v: int, statements: Sequence[Statement] = (), kind: str = 'unknown'):
        """
        Raises:
            SlpFormatError: 类型未知、编号越界或目标与来源相同
        """
        if kind not in KINDS:
            raise SlpFormatError(f'未知的程序类型 {kind}')
        if v < 0:
            raise SlpFormatError(f'宽度 {v} 不能为负数')
        self.v = int(v)
        self.kind = kind
        self.statements = tuple(statements)
        for st in self.statements:
            if st.op not in (ADD, SUB):
                raise SlpFormatError(f'未知的运算 {st.op}')
            if not (0 <= st.target < self.v and 0 <= st.source < self.v):
                raise SlpFormatError(f'语句 {st} 的编号超出宽度 {self.v}')
            if st.target == st.source:
                raise SlpFormatError(f'语句 {st} 的目标与来源相同')

    @property
    def length(self) -> int:
        """运算次数"""
        return len(self.statements)

    def __len__(self) -> int:
        return len(self.statements)

    def __iter__(self) -> Iterator[Statement]:
        return iter(self.statements)

    def evaluate(self, vector: Sequence[int]) -> List[int]:
        """
        在输入的副本上依次执行全部语句

        Raises:
            ValueError: 输入宽度不等于 v,或含有非整数元素
        """
        if len(vector) != self.v:
            raise ValueError(f'输入宽度 {len(vector)} 与程序宽度 {self.v} 不一致')
        out = [as_int(value) for value in vector]
        for st in self.statements:
            if st.op == ADD:
                out[st.target] += out[st.source]
            else:
                out[st.target] -= out[st.source]
        return out

    def to_matrix(self) -> TransformMatrix:
        """
        展开为矩阵 M,满足 evaluate(x) = x·M

        从单位阵出发,语句 add t s 等价于把第 s 列加到第 t 列上
        """
        entries = identity_entries(self.v)
        for st in self.statements:
            if st.op == ADD:
                entries[:, st.target] += entries[:, st.source]
            else:
                entries[:, st.target] -= entries[:, st.source]
        return TransformMatrix(entries, self.kind)

    def compose(self, other: 'Slp') -> 'Slp':
        """先执行 self 再执行 other"""
        if other.v != self.v:
            raise ValueError(f'程序宽度不一致: {self.v} != {other.v}')
        return Slp(self.v, self.statements + other.statements)

    def reversed_inverse(self) -> 'Slp':
        """逆程序:语句倒序且加减互换"""
        flipped = {ADD: SUB, SUB: ADD}
        inverse_kind = {'zeta': 'moebius', 'moebius': 'zeta'}.get(self.kind, 'unknown')
        return Slp(
            self.v,
            [Statement(flipped[st.op], st.target, st.source) for st in reversed(self.statements)],
            inverse_kind,
        )

    def lies_on_edges(self, poset: Poset) -> bool:
        """每条语句的 source ⋖ target 都是覆盖边"""
        return all(poset.is_cover(st.source, st.target) for st in self.statements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Slp):
            return NotImplemented
        return (self.v, self.kind, self.statements) == (other.v, other.kind, other.statements)

    def __repr__(self) -> str:
        return f'Slp(v={self.v}, kind={self.kind}, length={self.length})'


def evaluate(program: Slp, vector: Sequence[int]) -> List[int]:
    return program.evaluate(vector)


def slp_to_matrix(program: Slp) -> TransformMatrix:
    return program.to_matrix()


def parse_slp(text: str) -> Slp:
    """
    解析直线程序文件

    首个非注释行为 `slp v=<v> kind=<zeta|moebius|unknown>`,之后每行一条
    `add T S` 或 `sub T S`。

    Raises:
        SlpFormatError: 缺少文件头、格式错误或编号越界
    """
    v = None
    kind = 'unknown'
    statements = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if v is None:
            if tokens[0] != 'slp':
                raise SlpFormatError('缺少 slp 文件头', line_no)
            fields = dict(token.split('=', 1) for token in tokens[1:] if '=' in token)
            if len(fields) != len(tokens) - 1 or 'v' not in fields:
                raise SlpFormatError('文件头应为 slp v=<v> kind=<kind>', line_no)
            try:
                v = int(fields['v'])
            except ValueError:
                raise SlpFormatError(f'宽度 {fields["v"]} 不是整数', line_no)
            if v < 0:
                raise SlpFormatError(f'宽度 {v} 不能为负数', line_no)
            kind = fields.get('kind', 'unknown')
            if kind not in KINDS:
                raise SlpFormatError(f'未知的程序类型 {kind}', line_no)
            continue
        if tokens[0] not in (ADD, SUB) or len(tokens) != 3:
            raise SlpFormatError('语句应为 add T S 或 sub T S', line_no)
        try:
            target, source = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise SlpFormatError('元素编号必须是整数', line_no)
        if not (0 <= target < v and 0 <= source < v):
            raise SlpFormatError(f'编号超出宽度 {v}', line_no)
        if target == source:
            raise SlpFormatError('目标与来源相同', line_no)
        statements.append(Statement(tokens[0], target, source))

    if v is None:
        raise SlpFormatError('缺少 slp 文件头')
    return Slp(v, statements, kind)


def serialize_slp(program: Slp) -> str:
    lines = [f'slp v={program.v} kind={program.kind}']
    lines.extend(str(st) for st in program.statements)
    return '\n'.join(lines) + '\n'
