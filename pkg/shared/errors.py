"""
共享异常定义

全部继承 QptError(ValueError), 调用方按 ValueError 捕获也能工作.
CLI 根据异常类别映射退出码.
"""

from __future__ import annotations


class QptError(ValueError):
    """本项目所有业务异常的基类"""


class DimensionMismatch(QptError):
    """比特数或矩阵尺寸不一致"""


class NonHermitianInput(QptError):
    """输入矩阵不是厄米矩阵"""


class InvalidState(QptError):
    """迹、取值范围等不满足量子态约束"""


class NotPositive(QptError):
    """矩阵存在显著负本征值"""

    def __init__(self, message: str, min_eigenvalue: float) -> None:
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue


class ChannelSpecError(QptError):
    """通道描述本身非物理(参数越界、Kraus 不完备、矩阵非幺正)"""


class ParamOutOfRange(ChannelSpecError):
    """通道参数超出允许范围"""


class IncompleteKraus(ChannelSpecError):
    """Kraus 算符不满足完备性(不保迹)"""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


class NotUnitary(ChannelSpecError):
    """矩阵不是幺正矩阵"""


class CapExceeded(QptError):
    """比特数超过配置上限"""


class SingularBasis(QptError):
    """制备基矩阵 R 奇异或病态"""

    def __init__(self, message: str, condition_number: float) -> None:
        super().__init__(message)
        self.condition_number = condition_number


class MissingSetting(QptError):
    """估计 Fano 系数时缺少测量设置"""


class WrongDimension(QptError):
    """chi_F 的比特数与通道族不匹配"""


class InputOutOfRange(QptError):
    """数值输入超出定义域"""


class ConfigError(QptError):
    """配置文件或命令行参数无法解析"""


__all__ = [
    "CapExceeded",
    "ChannelSpecError",
    "ConfigError",
    "DimensionMismatch",
    "IncompleteKraus",
    "InputOutOfRange",
    "InvalidState",
    "MissingSetting",
    "NonHermitianInput",
    "NotPositive",
    "NotUnitary",
    "ParamOutOfRange",
    "QptError",
    "SingularBasis",
    "WrongDimension",
]
