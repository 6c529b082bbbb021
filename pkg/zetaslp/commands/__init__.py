"""
命令行子命令
每个模块提供 register(subparsers),处理函数签名为 handler(args, config) -> int
"""

from zetaslp.commands import bench, labels, posets, programs

COMMAND_MODULES = (posets, programs, labels, bench)
