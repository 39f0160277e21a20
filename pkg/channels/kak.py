"""两比特幺正的 KAK 形式(仅正向合成)

U = (A1 ⊗ B1) exp(i(tx XX + ty YY + tz ZZ)) (A2 ⊗ B2)

XX, YY, ZZ 两两对易, 在 Bell 基下同时对角化, 因此指数可以写成闭式.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from channels.kraus import check_unitary
from shared.errors import DimensionMismatch
from shared.typing import ComplexMatrix

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# 列: Phi+, Phi-, Psi+, Psi- (计算基表示)
_BELL_BASIS = _SQRT_HALF * np.array(
    [
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 1, -1],
        [1, -1, 0, 0],
    ],
    dtype=np.complex128,
)

# 每个 Bell 态在 (XX, YY, ZZ) 下的本征值
_BELL_EIGENVALUES = np.array(
    [
        [1, -1, 1],
        [-1, 1, 1],
        [1, 1, -1],
        [-1, -1, -1],
    ],
    dtype=np.float64,
)


def _identity2() -> ComplexMatrix:
    return np.eye(2, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class KakParams:
    """KAK 参数, 局部门默认为单位阵"""

    theta_x: float = 0.0
    theta_y: float = 0.0
    theta_z: float = 0.0
    a1: ComplexMatrix = field(default_factory=_identity2)
    b1: ComplexMatrix = field(default_factory=_identity2)
    a2: ComplexMatrix = field(default_factory=_identity2)
    b2: ComplexMatrix = field(default_factory=_identity2)

    def __post_init__(self) -> None:
        for label in ("a1", "b1", "a2", "b2"):
            matrix = check_unitary(getattr(self, label), label=label)
            if matrix.shape != (2, 2):
                raise DimensionMismatch(f"{label} 必须是 2x2 矩阵, 实际 {matrix.shape}")
            object.__setattr__(self, label, matrix)


def entangling_core(theta_x: float, theta_y: float, theta_z: float) -> ComplexMatrix:
    """exp(i(tx XX + ty YY + tz ZZ)), Bell 基闭式对角化"""
    phases = _BELL_EIGENVALUES @ np.array([theta_x, theta_y, theta_z])
    return _BELL_BASIS @ np.diag(np.exp(1j * phases)) @ _BELL_BASIS.conj().T


def kak_compose(kp: KakParams) -> ComplexMatrix:
    """按 KAK 形式合成 4x4 幺正

    Examples:
        全零角度、局部门为 I -> 4x4 单位阵
        只有 theta_z -> diag(e^{i tz}, e^{-i tz}, e^{-i tz}, e^{i tz})
    """
    core = entangling_core(kp.theta_x, kp.theta_y, kp.theta_z)
    return np.kron(kp.a1, kp.b1) @ core @ np.kron(kp.a2, kp.b2)
