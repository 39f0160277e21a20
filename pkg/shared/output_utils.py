"""
共享输出工具模块

提供统一的控制台输出功能: 高亮 JSON 与表格.
"""

import json
from collections.abc import Sequence
from typing import Any

from loguru import logger
from rich.console import Console
from rich.json import JSON
from rich.table import Table


def print_json(data: Any) -> None:
    """打印带高亮的JSON数据

    Args:
        data: 要输出的数据
    """
    console = Console()
    json_str = json.dumps(data, ensure_ascii=False, indent=2)
    console.print(JSON(json_str))


def print_table(
    title: str,
    columns: Sequence[str],
    rows: Sequence[Sequence[str]],
) -> None:
    """打印简单表格, 第一列左对齐其余右对齐

    Args:
        title: 表格标题
        columns: 列名
        rows: 已格式化为字符串的行
    """
    table = Table(title=title)
    for idx, column in enumerate(columns):
        table.add_column(column, justify="left" if idx == 0 else "right")
    for row in rows:
        table.add_row(*row)
    Console().print(table)


if __name__ == "__main__":
    logger.info("测试 print_json / print_table:")
    print_json({"n": 1, "M": [[0.5, 0, 0], [0, 0.5, 0], [0, 0, 1]], "a": [0, 0, 0]})
    print_table("demo", ["family", "residual"], [["phase_flip", "0"]])
