"""
基准统计服务
对配置中的格族逐一编译四种程序,汇总程序长度与边数之比
"""

import csv
import json
import logging
from io import StringIO
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from zetaslp.exceptions import NotALatticeError
from zetaslp.models.lattice import is_semimodular, lattice_structure
from zetaslp.models.poset import Poset
from zetaslp.services.generators import generate
from zetaslp.services.labelings import make_injective, semimodular_labeling
from zetaslp.services.oracle import verify_slp
from zetaslp.services.transforms import (
    compile_mobius_bjorklund,
    compile_mobius_edges,
    compile_zeta_bjorklund,
    compile_zeta_edges,
    make_order,
    order_by_height,
)

logger = logging.getLogger(__name__)

BENCH_COLUMNS = ['family', 'size', 'algorithm', 'order', 'length', 'e', 'ratio']


class BenchService:
    """基准服务类"""

    def __init__(self, config: Dict):
        """
        Args:
            config: 完整配置字典,使用其中的 bench 与 limits 段
        """
        self.bench_config = config.get('bench', {})
        self.limits = config.get('limits', {})

    def iter_instances(self, families: Optional[Iterable[str]] = None) -> Iterator[Tuple[str, List[int], Poset]]:
        """
        按配置生成实例

        Args:
            families: 只保留这些格族,为 None 时全部保留

        Yields:
            (格族名称, 参数列表, 偏序集)
        """
        wanted = set(families) if families else None
        for family, param_lists in self.bench_config.get('families', {}).items():
            if wanted is not None and family not in wanted:
                continue
            for params in param_lists:
                yield family, list(params), generate(family, list(params), self.limits)

    def run(self, families: Optional[Iterable[str]] = None, verify: bool = False) -> List[Dict]:
        """
        运行基准

        Args:
            families: 格族过滤
            verify: 是否对每个程序做矩阵校验,结果写入 verified 列

        Returns:
            行字典列表,键为 BENCH_COLUMNS(以及可选的 verified)
        """
        algorithms = self.bench_config.get('algorithms', [])
        orders = self.bench_config.get('orders', ['height'])
        rows = []
        for family, params, poset in self.iter_instances(families):
            size = ' '.join(str(p) for p in params) or '-'
            try:
                lattice = lattice_structure(poset)
            except NotALatticeError as e:
                logger.warning(f'{family} {size} 不是格,跳过: {e}')
                continue

            for algorithm in algorithms:
                if algorithm.endswith('-bjorklund'):
                    for order_name in orders:
                        order = make_order(lattice, order_name)
                        if algorithm == 'zeta-bjorklund':
                            program = compile_zeta_bjorklund(lattice, order)
                        else:
                            program = compile_mobius_bjorklund(lattice, order)
                        rows.append(self._row(family, size, algorithm, order_name, program, poset, verify))
                elif is_semimodular(lattice):
                    labeling = make_injective(
                        poset, semimodular_labeling(lattice, order_by_height(lattice))
                    )
                    if algorithm == 'zeta-edges':
                        program = compile_zeta_edges(poset, labeling)
                    else:
                        program = compile_mobius_edges(poset, labeling)
                    rows.append(self._row(family, size, algorithm, 'semimodular', program, poset, verify))
                else:
                    logger.debug(f'{family} {size} 不是半模格,跳过 {algorithm}')
        return rows

    def _row(self, family, size, algorithm, order_name, program, poset, verify) -> Dict:
        e = poset.edge_count
        row = {
            'family': family,
            'size': size,
            'algorithm': algorithm,
            'order': order_name,
            'length': program.length,
            'e': e,
            'ratio': round(program.length / e, 3) if e else None,
        }
        if verify:
            row['verified'] = verify_slp(poset, program, program.kind).ok
        return row


def _columns(rows: List[Dict]) -> List[str]:
    if rows and 'verified' in rows[0]:
        return BENCH_COLUMNS + ['verified']
    return list(BENCH_COLUMNS)


def format_table(rows: List[Dict]) -> str:
    """对齐的纯文本表格"""
    columns = _columns(rows)
    cells = [columns] + [
        ['-' if row[c] is None else str(row[c]).lower() if isinstance(row[c], bool) else str(row[c])
         for c in columns]
        for row in rows
    ]
    widths = [max(len(line[k]) for line in cells) for k in range(len(columns))]
    lines = ['  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells]
    return '\n'.join(lines) + '\n'


def format_csv(rows: List[Dict]) -> str:
    output = StringIO()
    writer = csv.DictWriter(output, fieldnames=_columns(rows), lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return output.getvalue()


def format_json(rows: List[Dict]) -> str:
    return json.dumps(rows, ensure_ascii=False, indent=2) + '\n'
