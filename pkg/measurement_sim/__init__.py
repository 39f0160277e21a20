"""
有限次测量模拟

测量前转动、Born 规则采样、Fano 系数估计与完整的层析实验.
"""

from .estimation import (
    FanoEstimate,
    binomial_stderr,
    compatible_setting,
    estimate_fano,
    exact_expectations,
    expectation_from_counts,
)
from .experiment import (
    DiscriminationData,
    TomographyRun,
    discrimination_experiment,
    reconstruct_from_tables,
    tomography_experiment,
)
from .sampling import ShotTable, outcome_distribution, sample_shots, stream_rng
from .settings import (
    MEASURED_AXES,
    MeasurementSetting,
    all_settings,
    rotation_for_axis,
    setting_rotation,
)
from .shot_io import ShotRecord, read_shot_tables, write_shot_tables

__all__ = [
    "MEASURED_AXES",
    "DiscriminationData",
    "FanoEstimate",
    "MeasurementSetting",
    "ShotRecord",
    "ShotTable",
    "TomographyRun",
    "all_settings",
    "binomial_stderr",
    "compatible_setting",
    "discrimination_experiment",
    "estimate_fano",
    "exact_expectations",
    "expectation_from_counts",
    "outcome_distribution",
    "read_shot_tables",
    "reconstruct_from_tables",
    "rotation_for_axis",
    "sample_shots",
    "setting_rotation",
    "stream_rng",
    "tomography_experiment",
    "write_shot_tables",
]
