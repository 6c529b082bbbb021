"""
配置与日志工具
读取仓库根目录下的 config.json,与默认值深度合并;按配置初始化日志
"""

import copy
import json
import logging
import os
import re
import sys
from logging.handlers import RotatingFileHandler
from typing import Dict, Optional

logger = logging.getLogger(__name__)

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
CONFIG_ENV = 'ZETASLP_CONFIG'

DEFAULT_CONFIG: Dict = {
    'logging': {
        'level': 'WARNING',
        'file': None,
        'max_size': '10MB',
    },
    'limits': {
        'boolean_max_n': 20,
        'partition_max_m': 7,
        'small_lattice_max_size': 6,
    },
    'verify': {
        'random_trials': 100,
        'seed': 0,
    },
    'bench': {
        'families': {
            'chain': [[4], [16], [64]],
            'boolean': [[3], [5], [8]],
            'divisor': [[12], [30], [360], [1024]],
            'partition': [[3], [4], [5]],
            'parallel-chains': [[2], [3], [4]],
            'pentagon': [[]],
            'hexagon': [[]],
            'figure1': [[]],
        },
        'algorithms': ['zeta-bjorklund', 'mobius-bjorklund', 'zeta-edges', 'mobius-edges'],
        'orders': ['height', 'reverse-height'],
        'results_path': 'data/bench_results.json',
    },
}

_LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def _deep_merge(base: Dict, override: Dict) -> Dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict:
    """
    读取配置文件

    查找顺序: 参数 path、环境变量 ZETASLP_CONFIG、仓库根目录的 config.json。
    文件不存在或读取失败时使用默认配置。

    Args:
        path: 配置文件路径

    Returns:
        合并后的配置字典
    """
    path = path or os.getenv(CONFIG_ENV) or os.path.join(PROJECT_ROOT, 'config.json')
    if not os.path.exists(path):
        logger.debug(f'配置文件不存在: {path},使用默认配置')
        return copy.deepcopy(DEFAULT_CONFIG)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            user_config = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.warning(f'配置文件读取失败: {str(e)}, 使用默认配置')
        return copy.deepcopy(DEFAULT_CONFIG)
    return _deep_merge(DEFAULT_CONFIG, user_config)


def resolve_path(path: str) -> str:
    """相对路径按仓库根目录解析,绝对路径原样返回"""
    if os.path.isabs(path):
        return path
    return os.path.join(PROJECT_ROOT, path)


def parse_size(text: str) -> int:
    """
    解析 "10MB"、"512KB" 这样的大小字符串为字节数

    Raises:
        ValueError: 格式无法识别
    """
    match = re.fullmatch(r'\s*(\d+)\s*([KMG]?B?)\s*', str(text).upper())
    if not match:
        raise ValueError(f'无法识别的大小: {text}')
    number, unit = int(match.group(1)), match.group(2).rstrip('B')
    return number * {'': 1, 'K': 1024, 'M': 1024 ** 2, 'G': 1024 ** 3}[unit]


def setup_logging(config: Dict, verbose: bool = False):
    """
    为 zetaslp 包的日志器配置 stderr 输出及可选的滚动日志文件

    相对的 logging.file 与 bench.results_path 一样按仓库根目录解析

    重复调用会先移除上一次添加的处理器
    """
    log_config = config.get('logging', {})
    level = logging.DEBUG if verbose else getattr(
        logging, str(log_config.get('level', 'WARNING')).upper(), logging.WARNING
    )
    package_logger = logging.getLogger('zetaslp')
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
        handler.close()
    package_logger.setLevel(level)

    formatter = logging.Formatter(_LOG_FORMAT)
    stream = logging.StreamHandler(sys.stderr)
    stream.setFormatter(formatter)
    package_logger.addHandler(stream)

    log_file = log_config.get('file')
    if log_file:
        log_file = resolve_path(log_file)
        os.makedirs(os.path.dirname(log_file), exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=parse_size(log_config.get('max_size', '10MB')),
            backupCount=3,
            encoding='utf-8',
        )
        file_handler.setFormatter(formatter)
        package_logger.addHandler(file_handler)
