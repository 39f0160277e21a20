"""完整的过程层析实验与两设置区分实验

tomography_experiment: 制备基 -> 通道 -> 每个态测 3^n 个设置 -> 估计 R' -> 重建.
总 shots = 4^n * 3^n * shots, 随结果一起返回.
"""

from __future__ import annotations

import concurrent.futures
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger

from channels import QuantumChannel, apply_channel
from measurement_sim.estimation import (
    binomial_stderr,
    estimate_fano,
    exact_expectations,
    expectation_from_counts,
)
from measurement_sim.sampling import ShotTable, sample_shots
from measurement_sim.settings import MeasurementSetting, all_settings
from pauli_fano import DensityMatrix, PauliString, pauli_index, pure_state
from shared.config import Config
from shared.errors import DimensionMismatch, MissingSetting
from shared.timing import time_block
from tomography import (
    PreparationBasis,
    ReconstructionResult,
    RMatrix,
    exact_output_matrix,
    preparation_basis,
    reconstruct,
)


@dataclass(frozen=True, eq=False)
class TomographyRun:
    """一次层析实验的结果; shots 为 None 表示精确期望值"""

    result: ReconstructionResult
    shots: int | None
    total_shots: int
    tables: tuple[ShotTable, ...] = ()


def _sample_all(
    outputs: Sequence[DensityMatrix], shots: int, seed: int, threads: int | None
) -> list[ShotTable]:
    n = outputs[0].n
    tasks = [
        (state_index, rho, setting)
        for state_index, rho in enumerate(outputs)
        for setting in all_settings(n)
    ]

    def run(task: tuple[int, DensityMatrix, MeasurementSetting]) -> ShotTable:
        state_index, rho, setting = task
        return sample_shots(rho, setting, shots, seed, state_index=state_index)

    workers = threads or Config.get_threads()
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        # map 保持任务顺序, 输出组装与并行度无关
        return list(pool.map(run, tasks))


def _output_matrix_from_tables(tables: Sequence[ShotTable], n: int) -> RMatrix:
    grouped: dict[int, list[ShotTable]] = {}
    for table in tables:
        if table.setting.n != n:
            raise DimensionMismatch(f"计数表为 {table.setting.n} 比特, 期望 {n} 比特")
        grouped.setdefault(table.state, []).append(table)
    expected_states = set(range(4**n))
    if set(grouped) != expected_states:
        missing = sorted(expected_states - set(grouped))
        raise MissingSetting(f"缺少制备态的计数: {missing}")
    columns = [estimate_fano(grouped[i]).vector.augmented() for i in range(4**n)]
    return RMatrix(np.column_stack(columns))


def tomography_experiment(
    channel: QuantumChannel,
    shots: int | None,
    seed: int = 0,
    threads: int | None = None,
) -> TomographyRun:
    """对通道做一次完整的过程层析

    Args:
        channel: 待测通道
        shots: 每个 (态, 设置) 的测量次数; None 表示用精确期望值
        seed: 主随机种子
        threads: 采样线程数, 默认 QPT_THREADS

    Returns:
        TomographyRun, 其中 total_shots = 4^n * 3^n * shots
    """
    basis: PreparationBasis = preparation_basis(channel.n)
    r_in = basis.input_matrix()
    if shots is None:
        r_out = exact_output_matrix(channel, basis)
        return TomographyRun(result=reconstruct(r_out, r_in), shots=None, total_shots=0)

    if shots < 1:
        raise ValueError(f"shots 必须 >= 1, 实际 {shots}")
    n = channel.n
    total = 4**n * 3**n * shots
    outputs = [apply_channel(channel, state) for state in basis.states]
    with time_block(f"采样 {channel.name} ({total} shots)"):
        tables = _sample_all(outputs, shots, seed, threads)
    logger.debug(f"{channel.name}: {4**n} 个态 x {3**n} 个设置, 总 shots={total}")
    r_out = _output_matrix_from_tables(tables, n)
    return TomographyRun(
        result=reconstruct(r_out, r_in, estimated=True),
        shots=shots,
        total_shots=total,
        tables=tuple(tables),
    )


def reconstruct_from_tables(tables: Sequence[ShotTable], n: int) -> TomographyRun:
    """用外部导入的计数表重建 chi_F"""
    if not tables:
        raise MissingSetting("没有任何计数表")
    r_in = preparation_basis(n).input_matrix()
    r_out = _output_matrix_from_tables(tables, n)
    shots = tables[0].shots
    return TomographyRun(
        result=reconstruct(r_out, r_in, estimated=True),
        shots=shots,
        total_shots=sum(table.shots for table in tables),
        tables=tuple(tables),
    )


@dataclass(frozen=True)
class DiscriminationData:
    """|+>|+> 经过通道后的 c_xx, c_yy; 精确模式下误差为 None"""

    c_xx: float
    c_yy: float
    stderr_xx: float | None
    stderr_yy: float | None
    shots: int | None


_PLUS_PLUS = np.full(4, 0.5, dtype=np.complex128)


def discrimination_experiment(
    channel: QuantumChannel, shots: int | None, seed: int = 0
) -> DiscriminationData:
    """只测 XX 与 YY 两个设置

    初态 |+>|+> 满足 c_xx = 1, c_yy = 0.

    Raises:
        DimensionMismatch: 通道不是两比特
    """
    if channel.n != 2:
        raise DimensionMismatch(f"区分实验需要两比特通道, 实际 {channel.n} 比特")
    rho = apply_channel(channel, pure_state(_PLUS_PLUS))
    xx, yy = PauliString.parse("XX"), PauliString.parse("YY")
    if shots is None:
        fano = exact_expectations(rho)
        return DiscriminationData(
            c_xx=float(fano.b[pauli_index(xx) - 1]),
            c_yy=float(fano.b[pauli_index(yy) - 1]),
            stderr_xx=None,
            stderr_yy=None,
            shots=None,
        )

    c_values: list[float] = []
    errors: list[float] = []
    for pauli in (xx, yy):
        setting = MeasurementSetting(pauli.axes)  # type: ignore[arg-type]
        table = sample_shots(rho, setting, shots, seed)
        value = expectation_from_counts(table, pauli)
        c_values.append(value)
        errors.append(float(binomial_stderr(value, shots)))
    return DiscriminationData(
        c_xx=c_values[0],
        c_yy=c_values[1],
        stderr_xx=errors[0],
        stderr_yy=errors[1],
        shots=shots,
    )
