"""
创建日期：2026年02月11日
介绍：异常类型。CLI 根据异常类型决定退出码
"""


class AtlasError(Exception):
    """所有错误的基类"""

    exit_code = 1


class RejectError(AtlasError, ValueError):
    """输入不满足前置条件（退化参数、非齐次元素、非支配权重等）"""

    exit_code = 2


class ParseError(AtlasError, ValueError):
    """εδ 序列、权重字面量或模描述无法解析"""

    exit_code = 2


class VerificationError(AtlasError):
    """精确校验失败：表示不满足超交换子恒等式、恒等式检查不通过等"""

    exit_code = 3


class NotSphericalError(AtlasError):
    """要求球面模的操作收到了非球面模"""

    exit_code = 4
