"""测量设置与测量前转动

设置只含 X/Y/Z, 共 3^n 个, 按 X<Y<Z 字典序排列且比特 1 变化最慢.
测量 sigma_axis 等价于先作用 W (W sigma_axis W^dag = sigma_z) 再在计算基读出,
读出 0 对应本征值 +1, 读出 1 对应 -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

import numpy as np

from shared.errors import DimensionMismatch
from shared.typing import ComplexMatrix, MeasuredAxisLiteral

MEASURED_AXES: tuple[MeasuredAxisLiteral, ...] = ("X", "Y", "Z")

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
_S_DAGGER = np.diag([1.0, -1j]).astype(np.complex128)

_ROTATIONS: dict[str, ComplexMatrix] = {
    "X": _HADAMARD,
    "Y": _HADAMARD @ _S_DAGGER,
    "Z": np.eye(2, dtype=np.complex128),
}


@dataclass(frozen=True)
class MeasurementSetting:
    axes: tuple[MeasuredAxisLiteral, ...]

    def __post_init__(self) -> None:
        if len(self.axes) < 1:
            raise DimensionMismatch("测量设置至少包含一个比特")
        invalid = [axis for axis in self.axes if axis not in MEASURED_AXES]
        if invalid:
            raise ValueError(f"测量设置只允许 X/Y/Z, 实际包含 {invalid}")

    @classmethod
    def parse(cls, text: str) -> MeasurementSetting:
        return cls(tuple(text.strip().upper()))  # type: ignore[arg-type]

    @property
    def n(self) -> int:
        return len(self.axes)

    @property
    def index(self) -> int:
        """在 all_settings(n) 中的 0 起始位置"""
        position = 0
        for axis in self.axes:
            position = position * 3 + MEASURED_AXES.index(axis)
        return position

    def __str__(self) -> str:
        return "".join(self.axes)


@cache
def all_settings(n: int) -> tuple[MeasurementSetting, ...]:
    return tuple(MeasurementSetting(axes) for axes in product(MEASURED_AXES, repeat=n))


def rotation_for_axis(axis: str) -> ComplexMatrix:
    """返回 W, 满足 W sigma_axis W^dag = sigma_z

    Examples:
        Z -> I
        X -> H
        Y -> H S^dag
    """
    if axis not in _ROTATIONS:
        raise ValueError(f"只能测量 X/Y/Z, 实际 {axis!r}")
    return _ROTATIONS[axis].copy()


def setting_rotation(setting: MeasurementSetting) -> ComplexMatrix:
    """⊗_k W_k, 比特 1 为最左侧因子"""
    rotation = _ROTATIONS[setting.axes[0]]
    for axis in setting.axes[1:]:
        rotation = np.kron(rotation, _ROTATIONS[axis])
    return rotation
