"""
异常定义模块
库代码只抛出这里的异常,由命令行层统一转换为退出码
"""

from typing import Optional, Tuple


class ZetaSlpError(Exception):
    """所有可预期错误的基类"""


class PosetFormatError(ZetaSlpError):
    """偏序集文件解析或 Hasse 图校验失败"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f'第 {line} 行: {message}'
        super().__init__(message)


class NotALatticeError(ZetaSlpError):
    """偏序集不是格,witness 为缺少唯一上确界或下确界的元素对"""

    def __init__(self, message: str, witness: Optional[Tuple[int, int]] = None):
        self.witness = witness
        super().__init__(message)


class LabelingError(ZetaSlpError):
    """边标号不合法或不满足算法前提"""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class OrderError(ZetaSlpError):
    """并不可约元的排列不合法"""


class SlpFormatError(ZetaSlpError):
    """直线程序文件解析或校验失败"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f'第 {line} 行: {message}'
        super().__init__(message)


class SizeGuardError(ZetaSlpError):
    """生成器参数超过规模上限"""
