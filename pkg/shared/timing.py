"""统一计时辅助工具

提供轻量的计时上下文管理器, 用于统一输出流水线各阶段的耗时日志.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from time import perf_counter

from loguru import logger


@dataclass
class Stopwatch:
    label: str
    elapsed: float = 0.0


@contextmanager
def time_block(label: str, level: str = "DEBUG") -> Iterator[Stopwatch]:
    """计时一个逻辑块并在完成后输出耗时日志.

    Args:
        label: 显示在日志中的逻辑块名称
        level: 日志级别

    Yields:
        Stopwatch, 退出后 elapsed 为秒数
    """
    watch = Stopwatch(label)
    start = perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed = perf_counter() - start
        logger.log(level, f"⏱ {label} 耗时: {watch.elapsed:.3f}s")
