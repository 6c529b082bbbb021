"""
直线程序相关命令: compile、verify
"""

import logging
from typing import Dict

from zetaslp.exceptions import LabelingError
from zetaslp.models.labeling import EdgeLabeling, parse_labeling
from zetaslp.models.lattice import lattice_structure
from zetaslp.models.poset import Poset, parse_poset
from zetaslp.models.slp import Slp, parse_slp, serialize_slp
from zetaslp.services.labelings import make_injective, semimodular_labeling
from zetaslp.services.oracle import smoke_check, verify_slp
from zetaslp.services.transforms import (
    ALGORITHMS,
    compile_mobius_bjorklund,
    compile_mobius_edges,
    compile_zeta_bjorklund,
    compile_zeta_edges,
    make_order,
)
from zetaslp.utils.files import read_text

logger = logging.getLogger(__name__)


def load_labeling(spec: str, poset: Poset, order_name: str = 'height') -> EdgeLabeling:
    """
    按 --labeling 的取值构造标号: semimodular 或 file:<path>

    只有 semimodular 需要格结构;标号文件适用于任意偏序集

    Raises:
        LabelingError: 取值无法识别,或标号文件/半模构造失败
        NotALatticeError: semimodular 用在非格上
    """
    if spec == 'semimodular':
        lattice = lattice_structure(poset)
        return semimodular_labeling(lattice, make_order(lattice, order_name))
    if spec.startswith('file:'):
        return parse_labeling(read_text(spec[len('file:'):]), poset)
    raise LabelingError(f'未知的标号来源 {spec},应为 semimodular 或 file:<path>')


def compile_program(poset: Poset, algorithm: str, order_name: str = 'height',
                    labeling_spec: str = 'semimodular', injectivize: bool = False) -> Slp:
    """
    按算法名称编译直线程序

    Args:
        poset: 偏序集;并不可约元算法与 semimodular 标号要求它是格
        algorithm: ALGORITHMS 之一
        order_name: 并不可约元排列策略
        labeling_spec: 沿边算法使用的标号来源
        injectivize: 沿边算法编译前先把标号单射化

    Raises:
        NotALatticeError, OrderError, LabelingError
    """
    if algorithm in ('zeta-bjorklund', 'mobius-bjorklund'):
        lattice = lattice_structure(poset)
        order = make_order(lattice, order_name)
        if algorithm == 'zeta-bjorklund':
            return compile_zeta_bjorklund(lattice, order)
        return compile_mobius_bjorklund(lattice, order)

    labeling = load_labeling(labeling_spec, poset, order_name)
    if injectivize:
        labeling = make_injective(poset, labeling)
    elif not labeling.injective:
        logger.warning('标号不是单射,可加 --injectivize')
    if algorithm == 'zeta-edges':
        return compile_zeta_edges(poset, labeling)
    return compile_mobius_edges(poset, labeling)


def cmd_compile(args, config: Dict) -> int:
    poset = parse_poset(read_text(args.poset))
    program = compile_program(poset, args.algorithm, args.order, args.labeling, args.injectivize)
    logger.info(f'{args.algorithm} 长度 {program.length}, e={poset.edge_count}')
    print(serialize_slp(program), end='')
    return 0


def cmd_verify(args, config: Dict) -> int:
    poset = parse_poset(read_text(args.poset))
    program = parse_slp(read_text(args.slp))
    kind = args.kind or program.kind
    if kind not in ('zeta', 'moebius'):
        raise ValueError('程序文件未声明类型,请用 --kind 指定 zeta 或 moebius')

    result = verify_slp(poset, program, kind)
    if not result.ok:
        x, y, got, want = result.witness
        print(f'mismatch {poset.name(x)} {poset.name(y)} got={got} want={want}')
        return 1

    if args.smoke:
        verify_config = config.get('verify', {})
        if not smoke_check(poset, program, kind,
                           trials=verify_config.get('random_trials', 100),
                           seed=verify_config.get('seed', 0)):
            print('mismatch random-vector')
            return 1
    print(f'ok kind={kind} length={program.length} e={poset.edge_count}')
    return 0


def register(subparsers):
    compile_parser = subparsers.add_parser('compile', help='把变换编译为直线程序')
    compile_parser.add_argument('poset', nargs='?', default='-')
    compile_parser.add_argument('--algorithm', choices=ALGORITHMS, default='zeta-bjorklund')
    compile_parser.add_argument('--order', default='height',
                                help='height、id、reverse-height 或 random:<seed>')
    compile_parser.add_argument('--labeling', default='semimodular',
                                help='沿边算法的标号来源: semimodular 或 file:<path>')
    compile_parser.add_argument('--injectivize', action='store_true',
                                help='编译前把标号单射化')
    compile_parser.set_defaults(handler=cmd_compile)

    verify = subparsers.add_parser('verify', help='用精确矩阵校验直线程序')
    verify.add_argument('poset')
    verify.add_argument('slp')
    verify.add_argument('--kind', choices=('zeta', 'moebius'), default=None,
                        help='默认取程序文件头中的类型')
    verify.add_argument('--smoke', action='store_true', help='额外做随机向量比较')
    verify.set_defaults(handler=cmd_verify)
