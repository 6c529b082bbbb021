"""
基准命令: bench
"""

import logging
from typing import Dict

from zetaslp.services.bench import BenchService, format_csv, format_json, format_table
from zetaslp.services.results_store import ResultsStore
from zetaslp.utils.config import resolve_path

logger = logging.getLogger(__name__)

FORMATTERS = {
    'table': format_table,
    'csv': format_csv,
    'json': format_json,
}


def cmd_bench(args, config: Dict) -> int:
    rows = BenchService(config).run(families=args.family, verify=args.verify)
    print(FORMATTERS[args.format](rows), end='')

    if args.save:
        results_path = resolve_path(config.get('bench', {}).get('results_path', 'data/bench_results.json'))
        run_id = ResultsStore(results_path).save_run(
            rows, {'families': args.family or 'all', 'verify': args.verify}
        )
        logger.info(f'已保存到 {results_path} (id={run_id})')

    if args.verify and not all(row.get('verified') for row in rows):
        return 1
    return 0


def register(subparsers):
    bench = subparsers.add_parser('bench', help='统计各格族上的程序长度')
    bench.add_argument('--family', action='append', help='只运行该格族,可重复')
    bench.add_argument('--format', choices=sorted(FORMATTERS), default='table')
    bench.add_argument('--verify', action='store_true', help='逐个程序做矩阵校验')
    bench.add_argument('--save', action='store_true', help='把本次结果追加到结果文件')
    bench.set_defaults(handler=cmd_bench)
