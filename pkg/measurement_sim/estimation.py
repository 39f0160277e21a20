"""由计数估计 Fano 系数

不含 I 的串直接取对应设置; 含 I 的串把 I 换成 Z 得到设置, 再对该设置做边缘化.
标准误差取插值二项方差 sqrt((1 - c^2) / shots).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache

import numpy as np

from measurement_sim.sampling import ShotTable
from measurement_sim.settings import MeasurementSetting, all_settings
from pauli_fano import (
    DensityMatrix,
    FanoVector,
    PauliString,
    all_pauli_strings,
    density_to_fano,
)
from shared.errors import DimensionMismatch, MissingSetting
from shared.typing import RealVector


@dataclass(frozen=True, eq=False)
class FanoEstimate:
    """估计的 Fano 向量与逐分量标准误差"""

    vector: FanoVector
    stderr: RealVector
    shots: int


def compatible_setting(pauli: PauliString) -> MeasurementSetting:
    """确定性规则: I -> Z"""
    return MeasurementSetting(tuple("Z" if axis == "I" else axis for axis in pauli.axes))


@cache
def _outcome_signs(n: int, mask: tuple[bool, ...]) -> np.ndarray:
    """每个结果 o 的 prod_{k in mask} (-1)^{o_k}"""
    outcomes = np.arange(2**n)
    signs = np.ones(2**n)
    for position, active in enumerate(mask):
        if active:
            bit = (outcomes >> (n - 1 - position)) & 1
            signs *= 1 - 2 * bit
    signs.setflags(write=False)
    return signs


def expectation_from_counts(table: ShotTable, pauli: PauliString) -> float:
    """从兼容设置的计数得到 <P> 的估计"""
    if not _is_compatible(pauli, table):
        raise MissingSetting(f"设置 {table.setting} 无法测量 {pauli}")
    mask = tuple(axis != "I" for axis in pauli.axes)
    return float(_outcome_signs(pauli.n, mask) @ table.frequencies())


def _is_compatible(pauli: PauliString, table: ShotTable) -> bool:
    return pauli.n == table.setting.n and all(
        p in ("I", s) for p, s in zip(pauli.axes, table.setting.axes, strict=True)
    )


def binomial_stderr(estimate: float | np.ndarray, shots: int) -> np.ndarray:
    return np.sqrt(np.clip(1.0 - np.square(estimate), 0.0, None) / shots)


def estimate_fano(tables: Sequence[ShotTable]) -> FanoEstimate:
    """单个态的全部 3^n 个设置 -> Fano 向量估计

    Raises:
        MissingSetting: 缺少设置或各设置 shots 不相等
        DimensionMismatch: 计数表比特数不一致
    """
    if not tables:
        raise MissingSetting("没有任何计数表")
    n = tables[0].setting.n
    if any(table.setting.n != n for table in tables):
        raise DimensionMismatch("计数表的比特数不一致")
    by_setting = {table.setting: table for table in tables}
    missing = [str(s) for s in all_settings(n) if s not in by_setting]
    if missing:
        raise MissingSetting(f"缺少测量设置: {', '.join(missing)}")
    budgets = {table.shots for table in by_setting.values()}
    if len(budgets) != 1:
        raise MissingSetting(f"各设置 shots 不相等: {sorted(budgets)}")
    shots = budgets.pop()

    estimates = np.array(
        [
            expectation_from_counts(by_setting[compatible_setting(pauli)], pauli)
            for pauli in all_pauli_strings(n)[:-1]
        ]
    )
    return FanoEstimate(
        vector=FanoVector(estimates),
        stderr=binomial_stderr(estimates, shots),
        shots=shots,
    )


def exact_expectations(rho: DensityMatrix) -> FanoVector:
    """无限次测量的极限, 即精确的 Tr(P rho)"""
    return density_to_fano(rho)
