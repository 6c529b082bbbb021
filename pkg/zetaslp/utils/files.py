"""
输入读取工具
"""

import sys


def read_text(path: str) -> str:
    """读取 UTF-8 文本文件,路径为 - 时读取标准输入"""
    if path == '-':
        return sys.stdin.read()
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()
