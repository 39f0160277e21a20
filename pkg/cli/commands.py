"""子命令实现: qpt / analyze / discriminate / channels list

每个命令返回退出码, 异常交给 cli.app 统一映射.
"""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Any

import pandas as pd
from loguru import logger

from channels import CHANNEL_CATALOGUE, channel_from_spec
from cli.models import RunConfig, load_run_config
from measurement_sim import (
    TomographyRun,
    discrimination_experiment,
    read_shot_tables,
    reconstruct_from_tables,
    tomography_experiment,
    write_shot_tables,
)
from noise_analysis import (
    build_report,
    dephasing_discriminator,
    render_report,
    report_to_json,
)
from shared.errors import ConfigError, QptError
from shared.number_format import format_float, format_with_error
from shared.output_utils import print_json, print_table
from tomography import load_process, process_to_csv, process_to_json

DEFAULT_OUT_PREFIX = "chi_f"


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    mode = args.mode
    if mode is None and args.shots is not None:
        mode = "shots"
    overrides: dict[str, Any] = {
        "mode": mode,
        "shots": args.shots,
        "seed": args.seed,
    }
    if args.command == "qpt":
        overrides.update(out=args.out, shots_out=args.shots_out)
    return load_run_config(Path(args.config), overrides)


def _write_outputs(run: TomographyRun, prefix: str, fmt: str) -> list[Path]:
    base = Path(prefix)
    base.parent.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    if fmt in {"json", "both"}:
        path = base.with_name(f"{base.name}.json")
        path.write_text(process_to_json(run.result) + "\n", encoding="utf-8")
        written.append(path)
    if fmt in {"csv", "both"}:
        path = base.with_name(f"{base.name}.csv")
        process_to_csv(run.result.process, path)
        written.append(path)
    return written


def _summarize_run(run: TomographyRun) -> None:
    result = run.result
    print_table(
        "重建诊断",
        ["item", "value"],
        [
            ["n", str(result.process.n)],
            ["shots", "exact" if run.shots is None else str(run.shots)],
            ["total shots", str(run.total_shots)],
            ["last row residual", format_float(result.last_row_residual)],
            ["min Choi eigenvalue", format_float(result.min_choi_eig)],
            ["cond(R)", format_float(result.condition_number)],
            ["physical", "✅" if result.is_physical else "❌"],
        ],
    )


def cmd_qpt(args: argparse.Namespace) -> int:
    """运行层析并写出 chi_F"""
    if args.from_shots:
        tables = read_shot_tables(Path(args.from_shots))
        if not tables:
            raise ConfigError(f"{args.from_shots}: 没有计数记录")
        n = tables[0].setting.n
        logger.info(f"📋 从 {args.from_shots} 导入 {len(tables)} 张计数表 (n={n})")
        run = reconstruct_from_tables(tables, n)
        prefix = args.out or DEFAULT_OUT_PREFIX
    else:
        if not args.config:
            raise ConfigError("需要 --config 或 --from-shots")
        config = _config_from_args(args)
        channel = channel_from_spec(config.channel)
        logger.info(f"📋 {channel.name}: n={config.qubits}, mode={config.mode}")
        run = tomography_experiment(channel, config.shots, seed=config.seed)
        prefix = config.out or DEFAULT_OUT_PREFIX
        if config.shots_out:
            count = write_shot_tables(run.tables, Path(config.shots_out))
            logger.info(f"✅ 写出 {count} 张计数表: {config.shots_out}")

    if not run.result.is_physical:
        logger.warning(
            f"⚠️ 重建结果非物理: min Choi 本征值 {run.result.min_choi_eig:.3e}"
        )
    for path in _write_outputs(run, prefix, args.format):
        logger.info(f"✅ 写出 {path}")
    _summarize_run(run)
    return 0


def _load_for_analysis(path: Path) -> Any:
    try:
        return load_process(path)
    except (OSError, ConfigError):
        raise
    except (QptError, ValueError, pd.errors.ParserError) as exc:
        # 形状或数值不合法的文件与格式错误一样处理
        raise ConfigError(f"{path}: 不是合法的 chi_F 文件: {exc}") from exc


def cmd_analyze(args: argparse.Namespace) -> int:
    """对 chi_F 文件做稀疏模式、拟合与预算分析"""
    proc = _load_for_analysis(Path(args.file))
    report = build_report(proc, threshold=args.threshold)
    if args.out:
        Path(args.out).write_text(report_to_json(report) + "\n", encoding="utf-8")
        logger.info(f"✅ 写出分析报告 {args.out}")
    render_report(report)
    if report.ambiguous:
        logger.info(f"📋 最优族并列: {', '.join(report.tied)}")
    else:
        best = report.fits[0] if report.fits else None
        if best is not None:
            logger.info(
                f"📋 最优族 {best.family}: {best.parameter}={format_float(best.param)}"
            )
    return 0


def cmd_discriminate(args: argparse.Namespace) -> int:
    """只测 XX / YY 的两设置实验, 判定关联或非关联退相位"""
    config = _config_from_args(args)
    if config.qubits != 2:
        raise ConfigError(f"区分实验需要两比特通道, 实际 {config.qubits} 比特")
    channel = channel_from_spec(config.channel)
    data = discrimination_experiment(channel, config.shots, seed=config.seed)
    result = dephasing_discriminator(
        data.c_xx,
        data.c_yy,
        stderr_xx=data.stderr_xx,
        stderr_yy=data.stderr_yy,
        n_sigma=args.n_sigma,
    )
    payload = result.model_dump(mode="json")
    payload["shots"] = data.shots
    if args.out:
        text = result.model_dump_json(indent=2)
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print_json(payload)
    g_text = (
        "-"
        if result.g_hat is None
        else format_with_error(result.g_hat, result.g_stderr)
    )
    logger.info(f"📋 {result.classification.value}: g = {g_text}")
    return 0


def cmd_channels_list(_args: argparse.Namespace) -> int:
    print_table(
        "内置通道",
        ["name", "n", "parameter", "range", "description"],
        [
            [
                family.name,
                str(family.n),
                family.parameter,
                f"[{format_float(family.lower)}, {format_float(family.upper)}]",
                family.description,
            ]
            for family in CHANNEL_CATALOGUE
        ],
    )
    return 0
