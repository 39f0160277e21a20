"""
数字格式化工具模块

控制台表格与日志里的浮点数显示: 限定有效数字并去掉多余的零.
文件输出不走这里, 文件保持完整精度.
"""

import math

from loguru import logger

DISPLAY_SIGNIFICANT_DIGITS = 6


def format_float(value: float, digits: int = DISPLAY_SIGNIFICANT_DIGITS) -> str:
    """
    按有效数字格式化浮点数

    Args:
        value: 要格式化的数字
        digits: 有效数字位数

    Returns:
        格式化后的字符串, 去除多余的零, -0 归一为 0

    Examples:
        0.50000000 -> "0.5"
        0.8187307530779818 -> "0.818731"
        1e-17 -> "1e-17"
        -0.0 -> "0"
    """
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0:
        return "0"

    formatted = f"{value:.{digits}g}"
    if "e" not in formatted and "." in formatted:
        formatted = formatted.rstrip("0").rstrip(".")
    return formatted


def format_with_error(value: float, error: float | None) -> str:
    """
    格式化带误差棒的数值

    Examples:
        (0.818731, 0.0021) -> "0.818731 ± 0.0021"
        (0.8, None) -> "0.8"
    """
    if error is None:
        return format_float(value)
    return f"{format_float(value)} ± {format_float(error, 2)}"


if __name__ == "__main__":
    test_cases = [0.5, 0.8187307530779818, 1e-17, -0.0, 12.0]
    logger.info("数字格式化测试:")
    for case in test_cases:
        logger.info(f"  {case} -> {format_float(case)}")
    logger.info(f"  误差棒: {format_with_error(0.8187, 0.0021)}")
