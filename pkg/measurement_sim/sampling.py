"""Born 规则采样

随机数流由 (seed, 态序号, 设置序号) 派生的 Philox 计数器生成器给出,
每个 (态, 设置) 的结果与执行顺序无关, 可以放心并行.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from measurement_sim.settings import MeasurementSetting, setting_rotation
from pauli_fano import DensityMatrix
from shared.constants import PROBABILITY_CLAMP
from shared.errors import DimensionMismatch, InvalidState
from shared.typing import RealVector

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class ShotTable:
    """单个测量设置的计数表

    counts 只记录出现过的结果, 键为 n 位 0/1 字符串, 比特 1 在最左.
    """

    setting: MeasurementSetting
    shots: int
    counts: dict[str, int] = field(hash=False)
    seed: int
    state: int = 0

    def __post_init__(self) -> None:
        if self.shots < 1:
            raise ValueError(f"shots 必须 >= 1, 实际 {self.shots}")
        n = self.setting.n
        for outcome, count in self.counts.items():
            if len(outcome) != n or set(outcome) - {"0", "1"}:
                raise ValueError(f"非法结果键 {outcome!r}, 需要 {n} 位 0/1 串")
            if count < 0:
                raise ValueError(f"计数不能为负: {outcome}={count}")
        total = sum(self.counts.values())
        if total != self.shots:
            raise ValueError(f"计数总和 {total} 与 shots {self.shots} 不一致")

    def frequencies(self) -> RealVector:
        """按结果整数值(比特 1 为最高位)排列的频率向量"""
        values = np.zeros(2**self.setting.n)
        for outcome, count in self.counts.items():
            values[int(outcome, 2)] = count
        return values / self.shots


def outcome_distribution(rho: DensityMatrix, setting: MeasurementSetting) -> RealVector:
    """p(o) = <o| W rho W^dag |o>

    Raises:
        DimensionMismatch: 比特数不一致
        InvalidState: 出现 < -PROBABILITY_CLAMP 的负概率
    """
    if rho.n != setting.n:
        raise DimensionMismatch(f"态 {rho.n} 比特, 测量设置 {setting.n} 比特")
    rotation = setting_rotation(setting)
    rotated = rotation @ rho.data @ rotation.conj().T
    probabilities = np.real(np.diag(rotated)).copy()
    if probabilities.min() < -PROBABILITY_CLAMP:
        raise InvalidState(f"出现负概率 {probabilities.min():.3e}, 输入态非法")
    probabilities = np.clip(probabilities, 0.0, None)
    return probabilities / probabilities.sum()


def stream_rng(seed: int, state_index: int, setting_index: int) -> np.random.Generator:
    """按 (seed, 态序号, 设置序号) 派生的独立随机数流"""
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed 必须在 [0, 2^64), 实际 {seed}")
    sequence = np.random.SeedSequence([seed, state_index, setting_index])
    return np.random.Generator(np.random.Philox(sequence))


def sample_shots(
    rho: DensityMatrix,
    setting: MeasurementSetting,
    shots: int,
    seed: int,
    state_index: int = 0,
) -> ShotTable:
    """多项分布抽样; 相同输入得到相同计数"""
    if shots < 1:
        raise ValueError(f"shots 必须 >= 1, 实际 {shots}")
    probabilities = outcome_distribution(rho, setting)
    rng = stream_rng(seed, state_index, setting.index)
    draws = rng.multinomial(shots, probabilities)
    n = setting.n
    counts = {
        format(outcome, f"0{n}b"): int(count)
        for outcome, count in enumerate(draws)
        if count > 0
    }
    return ShotTable(
        setting=setting, shots=shots, counts=counts, seed=seed, state=state_index
    )
