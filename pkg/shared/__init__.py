"""
共享模块

包含项目中多个模块共同使用的配置、异常、日志与输出工具
"""

from .config import Config
from .errors import QptError

__all__ = [
    "Config",
    "QptError",
]
