"""
基准结果存储
把 bench 的运行记录追加到 JSON 文件,读写都在文件锁内完成
"""

import json
import logging
import os
from collections import defaultdict
from datetime import datetime
from typing import Dict, List, Optional

from filelock import FileLock

logger = logging.getLogger(__name__)

MAX_RUNS = 1000


class ResultsStore:
    """JSON 结果存储类"""

    def __init__(self, json_path: str):
        """
        Args:
            json_path: JSON 文件路径,所在目录不存在时自动创建
        """
        self.json_path = json_path
        self.lock = FileLock(json_path + '.lock', timeout=10)

        directory = os.path.dirname(os.path.abspath(json_path))
        os.makedirs(directory, exist_ok=True)

        self._init_json_file()

    def _empty_data(self) -> Dict:
        return {
            'version': '1.0',
            'last_updated': datetime.now().isoformat(),
            'runs': [],
            'statistics': {},
        }

    def _init_json_file(self):
        """初始化 JSON 文件(如果不存在)"""
        with self.lock:
            if not os.path.exists(self.json_path):
                self._write_json(self._empty_data())

    def _read_json(self) -> Dict:
        try:
            with open(self.json_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (FileNotFoundError, json.JSONDecodeError):
            # 文件不存在或损坏,返回初始数据
            logger.warning(f'结果文件无法读取,按空文件处理: {self.json_path}')
            return self._empty_data()

    def _write_json(self, data: Dict):
        with self.lock:
            with open(self.json_path, 'w', encoding='utf-8') as f:
                json.dump(data, f, ensure_ascii=False, indent=2)

    def save_run(self, rows: List[Dict], meta: Optional[Dict] = None) -> int:
        """
        追加一次运行记录

        Args:
            rows: bench 输出的行
            meta: 附加信息,例如命令行参数

        Returns:
            新记录的编号
        """
        with self.lock:
            data = self._read_json()
            run_id = max((run['id'] for run in data['runs']), default=0) + 1
            data['runs'].insert(0, {
                'id': run_id,
                'timestamp': datetime.now().isoformat(),
                'meta': meta or {},
                'rows': rows,
            })
            # 只保留最近的记录
            data['runs'] = data['runs'][:MAX_RUNS]
            data['last_updated'] = datetime.now().isoformat()
            data['statistics'] = self._calculate_statistics(data['runs'])
            self._write_json(data)
        logger.info(f'基准记录已保存: id={run_id}, {len(rows)} 行')
        return run_id

    def get_runs(self, limit: Optional[int] = None) -> List[Dict]:
        """按时间倒序返回运行记录"""
        with self.lock:
            runs = self._read_json().get('runs', [])
        if limit and len(runs) > limit:
            runs = runs[:limit]
        return runs

    def summary(self) -> Dict:
        with self.lock:
            return self._read_json().get('statistics', {})

    def _calculate_statistics(self, runs: List[Dict]) -> Dict:
        """
        按算法汇总长度与 e 之比

        Returns:
            {'total_runs': ..., 'algorithms': {算法: {'instances', 'mean_ratio', 'max_ratio'}}}
        """
        ratios = defaultdict(list)
        for run in runs:
            for row in run['rows']:
                if row.get('ratio') is not None:
                    ratios[row['algorithm']].append(row['ratio'])

        algorithms = {
            name: {
                'instances': len(values),
                'mean_ratio': round(sum(values) / len(values), 4),
                'max_ratio': max(values),
            }
            for name, values in sorted(ratios.items())
        }
        return {'total_runs': len(runs), 'algorithms': algorithms}
