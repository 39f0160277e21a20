"""chi_F 分析报告: 稀疏模式 + 各族拟合 + 参数预算"""

from __future__ import annotations

from pydantic import BaseModel, Field

from channels import AffineProcess
from noise_analysis.budget import NoiseBudget, weak_local_budget
from noise_analysis.fitting import ChannelFit, fit_all
from noise_analysis.geometry import bloch_ellipsoid
from noise_analysis.pattern import sparsity_pattern
from shared.number_format import format_float
from shared.output_utils import print_table

DEFAULT_PATTERN_THRESHOLD = 1e-6


class PatternEntry(BaseModel):
    row: str = Field(..., description="输出 Pauli 标签")
    column: str = Field(..., description="输入 Pauli 标签或 a")
    value: float = Field(..., description="chi_F 元素")
    deviation: float = Field(..., description="相对恒等过程的偏离")


class PatternSummary(BaseModel):
    threshold: float = Field(..., gt=0.0, description="判定阈值")
    nonzero_count: int = Field(..., ge=0, description="偏离超过阈值的元素个数")
    entries: list[PatternEntry] = Field(default_factory=list)


class EllipsoidSummary(BaseModel):
    semi_axes: list[float] = Field(..., description="椭球半轴长度")
    axes: list[list[float]] = Field(..., description="每行一个主轴方向")
    center: list[float] = Field(..., description="椭球中心 a")


class AnalysisReport(BaseModel):
    n: int = Field(..., ge=1, description="比特数")
    pattern: PatternSummary
    fits: list[ChannelFit] = Field(..., description="各族拟合, 按残差升序")
    best: str | None = Field(None, description="残差最小的族")
    ambiguous: bool = Field(False, description="最小残差并列")
    tied: list[str] = Field(default_factory=list, description="并列最小的族")
    budget: NoiseBudget
    ellipsoid: EllipsoidSummary | None = Field(None, description="仅单比特")


def build_report(
    proc: AffineProcess, threshold: float = DEFAULT_PATTERN_THRESHOLD
) -> AnalysisReport:
    pattern = sparsity_pattern(proc, threshold)
    selection = fit_all(proc)
    ellipsoid = None
    if proc.n == 1:
        shape = bloch_ellipsoid(proc)
        ellipsoid = EllipsoidSummary(
            semi_axes=shape.semi_axes.tolist(),
            axes=shape.axes.T.tolist(),
            center=shape.center.tolist(),
        )
    return AnalysisReport(
        n=proc.n,
        pattern=PatternSummary(
            threshold=threshold,
            nonzero_count=pattern.nonzero_count,
            entries=[
                PatternEntry(
                    row=entry.row,
                    column=entry.column,
                    value=entry.value,
                    deviation=entry.deviation,
                )
                for entry in pattern.entries
            ],
        ),
        fits=selection.fits,
        best=selection.best,
        ambiguous=selection.ambiguous,
        tied=selection.tied,
        budget=weak_local_budget(proc.n),
        ellipsoid=ellipsoid,
    )


def report_to_json(report: AnalysisReport) -> str:
    return report.model_dump_json(indent=2)


def render_report(report: AnalysisReport) -> None:
    """在控制台用 rich 表格展示报告"""
    best = report.best
    print_table(
        f"噪声族拟合 (n={report.n})",
        ["family", "param", "residual", "best"],
        [
            [
                fit.family,
                f"{fit.parameter}={format_float(fit.param)}",
                format_float(fit.residual),
                "✅" if fit.family == best or fit.family in report.tied else "",
            ]
            for fit in report.fits
        ],
    )
    print_table(
        f"显著偏离 (阈值 {format_float(report.pattern.threshold)}, "
        f"共 {report.pattern.nonzero_count} 个)",
        ["entry", "value", "deviation"],
        [
            [
                f"{entry.row},{entry.column}",
                format_float(entry.value),
                format_float(entry.deviation),
            ]
            for entry in report.pattern.entries
        ],
    )
    budget = report.budget
    print_table(
        "参数预算",
        ["item", "count"],
        [
            ["local", str(budget.local)],
            ["crosstalk", str(budget.crosstalk)],
            ["total", str(budget.total)],
            ["generic", str(budget.generic)],
        ],
    )
