"""
边标号命令: label
"""

import logging
from typing import Dict

from zetaslp.exceptions import LabelingError
from zetaslp.models.labeling import parse_labeling, serialize_labeling
from zetaslp.models.lattice import lattice_structure
from zetaslp.models.poset import parse_poset
from zetaslp.services.labelings import dual_labeling, is_u_labeling, make_injective, semimodular_labeling
from zetaslp.services.transforms import make_order
from zetaslp.utils.files import read_text

logger = logging.getLogger(__name__)


def cmd_label(args, config: Dict) -> int:
    """
    构造或读取标号,依次应用 --dual、--make-injective,最后输出或检验

    --dual 时输出的标号属于对偶偏序集
    """
    poset = parse_poset(read_text(args.poset))
    if args.file:
        labeling = parse_labeling(read_text(args.file), poset)
    elif args.semimodular:
        lattice = lattice_structure(poset)
        labeling = semimodular_labeling(lattice, make_order(lattice, args.order))
    else:
        raise LabelingError('需要 --semimodular 或 --file 之一')

    if args.dual:
        labeling = dual_labeling(labeling, poset)
        poset = poset.dual()
    if args.make_injective:
        labeling = make_injective(poset, labeling)

    if not args.check:
        print(serialize_labeling(labeling, poset), end='')
        return 0

    report = is_u_labeling(poset, labeling)
    if report.is_u_labeling:
        print('u_labeling=true')
        print(f'r_labeling={"true" if poset.is_graded() else "false"}')
        return 0
    x, y, count = report.witness
    print('u_labeling=false')
    print(f'witness={poset.name(x)},{poset.name(y)} rising_chains={count}')
    return 1


def register(subparsers):
    label = subparsers.add_parser('label', help='构造、变换或检验边标号')
    label.add_argument('poset', nargs='?', default='-')
    source = label.add_mutually_exclusive_group()
    source.add_argument('--semimodular', action='store_true', help='使用半模格的标准标号')
    source.add_argument('--file', help='读取 label A B VALUE 格式的标号文件')
    label.add_argument('--order', default='height', help='半模标号使用的排列策略')
    label.add_argument('--dual', action='store_true', help='转为对偶偏序集上的标号')
    label.add_argument('--make-injective', action='store_true', help='单射化')
    label.add_argument('--check', action='store_true', help='检验是否为 U-标号')
    label.set_defaults(handler=cmd_label)
