"""制备基与 R 矩阵

单比特制备态顺序为 |0>, |1>, |+>, |+i>; n 比特取全部张量积, 比特 1 变化最慢.
R 的第 j 列是第 j 个制备态的 [b; 1]. 在这个顺序下 R(n) = R(1)^{⊗n},
R^{-1}(n) = R^{-1}(1)^{⊗n}. 模块导入时用打印的单比特矩阵做一次自检.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np
import scipy.linalg
from loguru import logger

from pauli_fano import DensityMatrix, density_to_fano, pure_state, tensor_states
from shared.config import Config
from shared.constants import MAX_CONDITION_NUMBER
from shared.errors import CapExceeded, DimensionMismatch, SingularBasis
from shared.typing import RealMatrix

_SQRT_HALF = 1.0 / np.sqrt(2.0)

SINGLE_QUBIT_KETS: tuple[tuple[str, np.ndarray], ...] = (
    ("0", np.array([1.0, 0.0], dtype=np.complex128)),
    ("1", np.array([0.0, 1.0], dtype=np.complex128)),
    ("+", np.array([_SQRT_HALF, _SQRT_HALF], dtype=np.complex128)),
    ("+i", np.array([_SQRT_HALF, 1j * _SQRT_HALF], dtype=np.complex128)),
)

# 单比特 R, 列为 |0>, |1>, |+>, |+i>, 行为 x, y, z, I
PRINTED_R1 = np.array(
    [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, -1, 0, 0],
        [1, 1, 1, 1],
    ],
    dtype=np.float64,
)

PRINTED_R1_INVERSE = np.array(
    [
        [-0.5, -0.5, 0.5, 0.5],
        [-0.5, -0.5, -0.5, 0.5],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ],
    dtype=np.float64,
)


@dataclass(frozen=True, eq=False)
class RMatrix:
    """4^n x 4^n 实矩阵, 列为态的 Fano 表示(末尾补 1)"""

    data: RealMatrix
    n: int = field(init=False)

    def __post_init__(self) -> None:
        matrix = np.array(self.data, dtype=np.float64)
        size = matrix.shape[0]
        n = (size.bit_length() - 1) // 2
        if matrix.shape != (size, size) or n < 1 or 4**n != size:
            raise DimensionMismatch(f"R 矩阵必须为 4^n x 4^n, 实际 {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, "data", matrix)
        object.__setattr__(self, "n", n)

    @cached_property
    def condition_number(self) -> float:
        return float(np.linalg.cond(self.data))

    @classmethod
    def from_states(cls, states: list[DensityMatrix]) -> RMatrix:
        columns = [density_to_fano(state).augmented() for state in states]
        return cls(np.column_stack(columns))


@dataclass(frozen=True, eq=False)
class PreparationBasis:
    n: int
    states: tuple[DensityMatrix, ...]
    labels: tuple[str, ...]

    def input_matrix(self) -> RMatrix:
        return RMatrix.from_states(list(self.states))


def preparation_basis(n: int) -> PreparationBasis:
    """全部 4^n 个张量积制备态

    Raises:
        CapExceeded: n < 1 或超过 QPT_MAX_QUBITS
    """
    cap = Config.get_max_qubits()
    if not 1 <= n <= cap:
        raise CapExceeded(f"比特数 {n} 超出允许范围 1..{cap} (QPT_MAX_QUBITS)")
    single = [(label, pure_state(ket)) for label, ket in SINGLE_QUBIT_KETS]
    states: list[DensityMatrix] = []
    labels: list[str] = []
    for combo in product(single, repeat=n):
        labels.append("".join(f"|{label}>" for label, _ in combo))
        states.append(tensor_states(*(state for _, state in combo)))
    return PreparationBasis(n=n, states=tuple(states), labels=tuple(labels))


def invert_R(r: RMatrix) -> RMatrix:
    """部分选主元 LU 求逆

    Raises:
        SingularBasis: 奇异或条件数超过 MAX_CONDITION_NUMBER
    """
    condition = r.condition_number
    if not np.isfinite(condition) or condition > MAX_CONDITION_NUMBER:
        raise SingularBasis(f"R 矩阵病态, 条件数 {condition:.3e}", condition)
    try:
        factors = scipy.linalg.lu_factor(r.data, check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise SingularBasis(f"R 矩阵 LU 分解失败: {exc}", condition) from exc
    inverse = scipy.linalg.lu_solve(factors, np.eye(r.data.shape[0]))
    residual = float(np.max(np.abs(r.data @ inverse - np.eye(r.data.shape[0]))))
    logger.debug(f"R^-1: n={r.n}, cond={condition:.3g}, max|R R^-1 - I|={residual:.2e}")
    return RMatrix(inverse)


def _self_test() -> None:
    built = preparation_basis(1).input_matrix().data
    if not np.allclose(built, PRINTED_R1, rtol=0.0, atol=1e-12):
        raise RuntimeError(f"制备基顺序与单比特 R 不一致:\n{built}")
    if not np.allclose(invert_R(RMatrix(built)).data, PRINTED_R1_INVERSE, atol=1e-12):
        raise RuntimeError("单比特 R^-1 与打印矩阵不一致")


_self_test()
