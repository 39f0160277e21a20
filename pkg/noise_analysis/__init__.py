"""
噪声分析

chi_F 稀疏模式、单参数噪声族拟合、关联退相位判别与参数计数.
"""

from .budget import (
    NoiseBudget,
    ParameterCount,
    generic_parameter_count,
    parameter_count,
    weak_local_budget,
)
from .discrimination import DephasingClass, DiscriminationResult, dephasing_discriminator
from .families import FIT_FAMILIES, FitFamily, get_fit_family
from .fitting import ChannelFit, ModelSelection, fit_all, fit_channel
from .geometry import BlochEllipsoid, bloch_ellipsoid, superpose_weak_noise
from .pattern import FlaggedEntry, PatternReport, sparsity_pattern
from .report import AnalysisReport, build_report, render_report, report_to_json

__all__ = [
    "FIT_FAMILIES",
    "AnalysisReport",
    "BlochEllipsoid",
    "ChannelFit",
    "DephasingClass",
    "DiscriminationResult",
    "FitFamily",
    "FlaggedEntry",
    "ModelSelection",
    "NoiseBudget",
    "ParameterCount",
    "PatternReport",
    "bloch_ellipsoid",
    "build_report",
    "dephasing_discriminator",
    "fit_all",
    "fit_channel",
    "generic_parameter_count",
    "get_fit_family",
    "parameter_count",
    "render_report",
    "report_to_json",
    "sparsity_pattern",
    "superpose_weak_noise",
    "weak_local_budget",
]
