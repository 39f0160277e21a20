"""
共享配置模块

统一管理运行期配置,支持 .env 文件、环境变量和默认值.
数值容差等不随环境变化的常量放在 shared.constants.
"""

import os
from pathlib import Path

from loguru import logger

from shared.constants import DEFAULT_MAX_QUBITS
from shared.errors import ConfigError


def _load_env_file() -> None:
    """加载项目根目录 .env 文件中的环境变量(已存在的变量不覆盖)"""
    env_file = Path(__file__).parent.parent / ".env"
    if not env_file.exists():
        return

    try:
        with env_file.open(encoding="utf-8") as file:
            for raw_line in file:
                parsed = _parse_env_line(raw_line)
                if not parsed:
                    continue
                key, value = parsed
                if key and not os.getenv(key):
                    os.environ[key] = value
    except OSError as exc:
        logger.warning(f"读取 .env 失败, 忽略: {exc}")


def _parse_env_line(raw_line: str) -> tuple[str, str] | None:
    """解析单行 KEY=VALUE 记录"""
    line = raw_line.strip()
    if not line or line.startswith("#") or "=" not in line:
        return None

    key_part, value_part = line.split("=", 1)
    key = key_part.strip().removeprefix("export ").strip()
    if not key:
        return None

    return key, _sanitize_env_value(value_part.strip())


def _sanitize_env_value(value: str) -> str:
    """移除行尾注释与成对引号"""
    if not value:
        return ""

    if value[0] not in {'"', "'"} and "#" in value:
        value = value.split("#", 1)[0].strip()

    if len(value) >= 2 and value[0] in {'"', "'"} and value[-1] == value[0]:
        return value[1:-1]

    return value


def _read_positive_int(name: str, default: int) -> int:
    """读取正整数环境变量, 非法值直接失败"""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} 必须为正整数, 实际: {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"{name} 必须为正整数, 实际: {value}")
    return value


# 模块导入时自动加载环境变量
_load_env_file()


class Config:
    """应用配置类"""

    @staticmethod
    def get_threads() -> int:
        """采样并行线程上限 (QPT_THREADS, 默认 CPU 核数)"""
        return _read_positive_int("QPT_THREADS", os.cpu_count() or 1)

    @staticmethod
    def get_max_qubits() -> int:
        """允许的最大比特数 (QPT_MAX_QUBITS); 超算符规模按 16^n 增长"""
        return _read_positive_int("QPT_MAX_QUBITS", DEFAULT_MAX_QUBITS)

    @staticmethod
    def get_log_level() -> str:
        """获取日志级别"""
        return os.getenv("LOG_LEVEL", "INFO").upper()

    @staticmethod
    def get_log_style() -> str:
        """控制台日志样式: normal / concise"""
        return os.getenv("QPT_LOG_STYLE", "normal").lower()


if __name__ == "__main__":
    logger.info("📋 当前配置信息:")
    logger.info(f"Threads: {Config.get_threads()}")
    logger.info(f"Max qubits: {Config.get_max_qubits()}")
    logger.info(f"Log Level: {Config.get_log_level()}")
    logger.info(f"Log Style: {Config.get_log_style()}")
