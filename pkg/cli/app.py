"""
qpt 命令行入口

用法:
    p -m cli qpt --config configs/phase_flip.json --out results/phase_flip
    p -m cli qpt --config configs/phase_flip.json --shots 10000 --seed 7
    p -m cli analyze results/phase_flip.json --threshold 1e-6
    p -m cli discriminate --config configs/correlated.json --shots 100000
    p -m cli channels list

退出码: 0 成功; 2 配置或输入错误; 3 数值失败; 4 非物理通道参数.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from loguru import logger
from pydantic import ValidationError

from cli.commands import cmd_analyze, cmd_channels_list, cmd_discriminate, cmd_qpt
from shared.constants import DEFAULT_SIGMA_LEVEL
from shared.errors import ChannelSpecError, ConfigError, QptError
from shared.logger_utils import setup_cli_logger

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_CHANNEL_SPEC = 4
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


def _positive_float(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"不是数值: {raw}") from exc
    if not value > 0:
        raise argparse.ArgumentTypeError(f"必须为正: {raw}")
    return value


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"不是整数: {raw}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"必须 >= 1: {raw}")
    return value


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode", choices=["exact", "shots"], default=None, help="覆盖配置中的 mode"
    )
    parser.add_argument(
        "--shots",
        type=_positive_int,
        default=None,
        help="每个 (态, 设置) 的测量次数; 给出时默认 mode=shots",
    )
    parser.add_argument("--seed", type=int, default=None, help="覆盖配置中的随机种子")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpt", description="Fano 表示下的量子过程层析与噪声分析"
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="日志级别, 覆盖 LOG_LEVEL (如 DEBUG)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    qpt = subparsers.add_parser("qpt", help="运行过程层析并写出 chi_F")
    qpt.add_argument("--config", default=None, help="运行配置 JSON 文件")
    _add_run_arguments(qpt)
    qpt.add_argument("--out", default=None, help="输出路径前缀, 生成 <前缀>.json / .csv")
    qpt.add_argument(
        "--format",
        choices=["json", "csv", "both"],
        default="both",
        help="写出的文件格式",
    )
    qpt.add_argument("--shots-out", default=None, help="计数表 JSON lines 输出路径")
    qpt.add_argument("--from-shots", default=None, help="从计数表 JSON lines 重建")
    qpt.set_defaults(handler=cmd_qpt)

    analyze = subparsers.add_parser("analyze", help="分析 chi_F 文件 (.json / .csv)")
    analyze.add_argument("file", help="chi_F 文件")
    analyze.add_argument(
        "--threshold",
        type=_positive_float,
        default=1e-6,
        help="稀疏模式阈值",
    )
    analyze.add_argument("--out", default=None, help="分析报告 JSON 输出路径")
    analyze.set_defaults(handler=cmd_analyze)

    discriminate = subparsers.add_parser(
        "discriminate", help="两设置实验区分关联 / 非关联退相位"
    )
    discriminate.add_argument("--config", required=True, help="运行配置 JSON 文件")
    _add_run_arguments(discriminate)
    discriminate.add_argument(
        "--n-sigma",
        type=_positive_float,
        default=DEFAULT_SIGMA_LEVEL,
        help="统计模式下的置信倍数",
    )
    discriminate.add_argument("--out", default=None, help="判定结果 JSON 输出路径")
    discriminate.set_defaults(handler=cmd_discriminate)

    channels = subparsers.add_parser("channels", help="内置通道目录")
    channels_sub = channels.add_subparsers(dest="channels_command", required=True)
    channels_list = channels_sub.add_parser("list", help="列出内置通道族")
    channels_list.set_defaults(handler=cmd_channels_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """解析参数并执行子命令, 返回退出码"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_cli_logger(args.log_level)

    try:
        return args.handler(args)
    except ChannelSpecError as exc:
        logger.error(f"❌ 非物理通道参数: {exc}")
        return EXIT_CHANNEL_SPEC
    except (ConfigError, ValidationError, json.JSONDecodeError, OSError) as exc:
        logger.error(f"❌ 配置或输入错误: {exc}")
        return EXIT_CONFIG
    except QptError as exc:
        logger.error(f"❌ 数值失败: {exc}")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
