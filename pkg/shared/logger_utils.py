"""共享日志工具模块

提供命令行与测试共用的 loguru 配置.
配置完成后各模块直接 from loguru import logger 使用.
"""

import sys

from loguru import logger

from shared.config import Config

_NORMAL_FORMAT = (
    "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level:<8} | {name}:{function}:{line} - {message}"
)
_CONCISE_FORMAT = "{time:HH:mm:ss.SSS} {message}"


def setup_cli_logger(level: str | None = None) -> None:
    """配置命令行的日志输出

    配置规则:
    - 输出到 stderr, stdout 留给报告和 JSON
    - 级别: 参数优先, 否则读取 LOG_LEVEL (默认 INFO)
    - 样式: QPT_LOG_STYLE=concise 时只输出时间和消息

    Args:
        level: 覆盖日志级别, 如 "DEBUG"
    """
    # 移除默认的日志处理器,重新配置
    logger.remove()

    fmt = _CONCISE_FORMAT if Config.get_log_style() == "concise" else _NORMAL_FORMAT
    _ = logger.add(sys.stderr, level=(level or Config.get_log_level()).upper(), format=fmt)


if __name__ == "__main__":
    setup_cli_logger("DEBUG")
    logger.debug("调试日志可见")
    logger.info("📁 共享日志工具模块加载成功")
