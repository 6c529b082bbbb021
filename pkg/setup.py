"""
zetaslp 安装脚本
"""

from setuptools import find_packages, setup

with open('requirements.txt', 'r', encoding='utf-8') as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith('pytest')]

setup(
    name='zetaslp',
    version='1.0.0',
    description='格上 zeta / Möbius 变换的直线程序编译与校验',
    packages=find_packages(exclude=('tests', 'tests.*')),
    python_requires='>=3.8',
    install_requires=requirements,
    extras_require={'test': ['pytest==8.0.0']},
    entry_points={
        'console_scripts': ['zetaslp=zetaslp.app:main'],
    },
)
