"""
zetaslp: 格上 zeta / Möbius 变换的直线程序编译与校验
"""

__version__ = '1.0.0'
