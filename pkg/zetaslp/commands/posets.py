"""
偏序集相关命令: gen、analyze、dual
"""

import logging
from typing import Dict, List, Tuple

from zetaslp.exceptions import LabelingError, NotALatticeError
from zetaslp.models.lattice import (
    complexity_parameters,
    is_atomic,
    is_geometric,
    is_lower_semimodular,
    is_semimodular,
    lattice_structure,
    satisfies_cover_condition,
    within_edge_bounds,
)
from zetaslp.models.poset import Poset, parse_poset, serialize_poset
from zetaslp.services.generators import FAMILIES, generate
from zetaslp.services.labelings import is_u_labeling, semimodular_labeling
from zetaslp.services.transforms import compile_zeta_bjorklund, order_by_height
from zetaslp.utils.files import read_text

logger = logging.getLogger(__name__)


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def analyze_poset(poset: Poset) -> List[Tuple[str, str]]:
    """
    汇总偏序集的结构性质

    Returns:
        (键, 值) 列表,顺序固定;非格时只给出 v、e、lattice、witness 与 graded
    """
    try:
        lattice = lattice_structure(poset)
    except NotALatticeError as e:
        report = [('v', str(poset.size)), ('e', str(poset.edge_count)), ('lattice', 'false')]
        if e.witness is not None:
            x, y = e.witness
            report.append(('witness', f'{poset.name(x)},{poset.name(y)}'))
        report.append(('graded', _flag(poset.is_graded())))
        return report

    v, n, e = complexity_parameters(lattice)
    semimodular = is_semimodular(lattice)
    order = order_by_height(lattice)
    u_labelable = False
    if semimodular:
        try:
            u_labelable = is_u_labeling(poset, semimodular_labeling(lattice, order)).is_u_labeling
        except LabelingError as err:
            logger.warning(f'半模标号构造失败: {err}')
    return [
        ('v', str(v)),
        ('n', str(n)),
        ('e', str(e)),
        ('lattice', 'true'),
        ('atomic', _flag(is_atomic(lattice))),
        ('semimodular', _flag(semimodular)),
        ('lower_semimodular', _flag(is_lower_semimodular(lattice))),
        ('geometric', _flag(is_geometric(lattice))),
        ('cover_condition', _flag(satisfies_cover_condition(lattice))),
        ('graded', _flag(poset.is_graded())),
        ('edge_bounds', _flag(within_edge_bounds(lattice))),
        ('u_labelable_semimodular', _flag(u_labelable)),
        ('bjorklund_height_length', str(compile_zeta_bjorklund(lattice, order).length)),
    ]


def cmd_gen(args, config: Dict) -> int:
    poset = generate(args.family, args.params, config.get('limits', {}))
    print(serialize_poset(poset), end='')
    return 0


def cmd_analyze(args, config: Dict) -> int:
    poset = parse_poset(read_text(args.poset))
    for key, value in analyze_poset(poset):
        print(f'{key}={value}')
    return 0


def cmd_dual(args, config: Dict) -> int:
    poset = parse_poset(read_text(args.poset))
    print(serialize_poset(poset.dual()), end='')
    return 0


def register(subparsers):
    gen = subparsers.add_parser('gen', help='生成格族实例,输出偏序集文件')
    gen.add_argument('family', choices=sorted(FAMILIES))
    gen.add_argument('params', nargs='*', type=int, help='整数参数')
    gen.set_defaults(handler=cmd_gen)

    analyze = subparsers.add_parser('analyze', help='输出结构性质报告')
    analyze.add_argument('poset', nargs='?', default='-', help='偏序集文件,- 表示标准输入')
    analyze.set_defaults(handler=cmd_analyze)

    dual = subparsers.add_parser('dual', help='输出对偶偏序集')
    dual.add_argument('poset', nargs='?', default='-')
    dual.set_defaults(handler=cmd_dual)
