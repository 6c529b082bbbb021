"""
命令行主入口
"""

import argparse
import logging
import sys
from typing import List, Optional

from zetaslp.commands import COMMAND_MODULES
from zetaslp.exceptions import ZetaSlpError
from zetaslp.utils.config import load_config, setup_logging

logger = logging.getLogger(__name__)


def create_parser() -> argparse.ArgumentParser:
    """
    创建命令行解析器并注册所有子命令

    Returns:
        ArgumentParser 对象
    """
    parser = argparse.ArgumentParser(
        prog='zetaslp',
        description='把格上的 zeta / Möbius 变换编译为直线程序并校验',
    )
    parser.add_argument('--config', default=None, help='配置文件路径,默认读取 ZETASLP_CONFIG 或 config.json')
    parser.add_argument('-v', '--verbose', action='store_true', help='输出调试日志')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    # 注册子命令
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 的用法错误退出码本来就是 2
        return e.code if isinstance(e.code, int) else 2

    config = load_config(args.config)
    setup_logging(config, verbose=args.verbose)

    try:
        return args.handler(args, config)
    except ZetaSlpError as e:
        print(f'错误: {e}', file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as e:
        logger.debug('命令执行失败', exc_info=True)
        print(f'错误: {e}', file=sys.stderr)
        return 2
