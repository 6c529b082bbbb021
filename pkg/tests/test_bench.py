"""
基准服务测试
"""

import json

from zetaslp.services.bench import BENCH_COLUMNS, BenchService, format_csv, format_json, format_table

CONFIG = {
    'limits': {},
    'bench': {
        'families': {
            'figure1': [[]],
            'pentagon': [[]],
            'chain': [[4]],
            'boolean': [[0]],
        },
        'algorithms': ['zeta-bjorklund', 'mobius-bjorklund', 'zeta-edges', 'mobius-edges'],
        'orders': ['height', 'reverse-height'],
    },
}


class TestBenchService:
    """行的生成"""

    def test_figure1_rows(self):
        rows = BenchService(CONFIG).run(families=['figure1'])
        keyed = {(row['algorithm'], row['order']): row for row in rows}
        assert keyed[('zeta-bjorklund', 'height')]['length'] == 9
        assert keyed[('zeta-bjorklund', 'height')]['ratio'] == 1.0
        assert keyed[('zeta-edges', 'semimodular')]['length'] == 9
        assert keyed[('mobius-edges', 'semimodular')]['e'] == 9
        assert len(rows) == 6

    def test_edges_skipped_when_not_semimodular(self):
        rows = BenchService(CONFIG).run(families=['pentagon'])
        assert {row['algorithm'] for row in rows} == {'zeta-bjorklund', 'mobius-bjorklund'}

    def test_chain_contrast(self):
        rows = BenchService(CONFIG).run(families=['chain'])
        keyed = {(row['algorithm'], row['order']): row for row in rows}
        assert keyed[('zeta-bjorklund', 'reverse-height')]['length'] == 6
        assert keyed[('zeta-bjorklund', 'reverse-height')]['ratio'] == 2.0
        assert keyed[('zeta-bjorklund', 'height')]['size'] == '4'

    def test_empty_lattice_has_no_ratio(self):
        rows = BenchService(CONFIG).run(families=['boolean'])
        assert all(row['e'] == 0 and row['ratio'] is None for row in rows)

    def test_verify_column(self):
        rows = BenchService(CONFIG).run(verify=True)
        assert rows
        assert all(row['verified'] is True for row in rows)


class TestFormats:
    """表格、CSV 与 JSON 输出"""

    def test_table(self):
        rows = BenchService(CONFIG).run(families=['figure1'])
        lines = format_table(rows).splitlines()
        assert lines[0].split() == BENCH_COLUMNS
        assert len(lines) == 7
        assert lines[1].split()[:4] == ['figure1', '-', 'zeta-bjorklund', 'height']

    def test_csv(self):
        rows = BenchService(CONFIG).run(families=['boolean'], verify=True)
        lines = format_csv(rows).splitlines()
        assert lines[0] == ','.join(BENCH_COLUMNS + ['verified'])
        assert lines[1] == 'boolean,0,zeta-bjorklund,height,0,0,,True'

    def test_json(self):
        rows = BenchService(CONFIG).run(families=['pentagon'])
        assert json.loads(format_json(rows)) == rows
