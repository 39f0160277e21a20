"""退相位通道: 参数化与关联退相位

关联退相位: 所有比特经历同一个随机角度 theta 的 R_z(theta),
theta 服从方差 2*lam 的高斯分布. 在计算基下等价于逐元素衰减相干项:

    rho'_jk = rho_jk * exp(-lam * ((S_j - S_k) / 2)^2)

S_j 为基矢 j 中各比特 (+1 表示 |0>, -1 表示 |1>) 之和. 两比特时衰减因子
只取 1, g, g^4 三个值, g = exp(-lam).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from loguru import logger

from channels.affine import AffineProcess
from channels.kraus import KrausChannel
from pauli_fano import PauliString, pauli_from_index, pauli_index
from shared.errors import ParamOutOfRange
from shared.typing import ComplexMatrix


@dataclass(frozen=True)
class DephasingParams:
    """退相位参数

    关联退相位由 lam 给出 g = exp(-lam).
    h = (1 + g^4)/2, k = (1 - g^4)/2, 因此 h + k = 1, h - k = g^4.
    """

    g: float
    lam: float

    @classmethod
    def from_kick(cls, lam: float) -> DephasingParams:
        if not lam >= 0.0 or math.isinf(lam):
            raise ParamOutOfRange(f"lam 必须为有限非负数, 实际 {lam}")
        return cls(g=math.exp(-lam), lam=lam)

    @property
    def h(self) -> float:
        return 0.5 * (1.0 + self.g**4)

    @property
    def k(self) -> float:
        return 0.5 * (1.0 - self.g**4)


def rz(theta: float) -> ComplexMatrix:
    """单比特 R_z(theta) = diag(e^{-i theta/2}, e^{+i theta/2})"""
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def rz_pair(theta: float) -> ComplexMatrix:
    """两比特同角度转动 R_z(theta) ⊗ R_z(theta)"""
    single = rz(theta)
    return np.kron(single, single)


def _spin_sums(n: int) -> np.ndarray:
    """计算基矢 j 对应的 S_j, 比特 1 为最高位"""
    bits = (np.arange(2**n)[:, None] >> np.arange(n - 1, -1, -1)) & 1
    return (1 - 2 * bits).sum(axis=1)


@dataclass(frozen=True, eq=False)
class CorrelatedDephasingChannel:
    """n 比特关联退相位通道(态层面的解析实现)"""

    lam: float
    n: int = 2
    name: str = field(default="correlated_dephasing")

    def __post_init__(self) -> None:
        DephasingParams.from_kick(self.lam)
        if self.n < 1:
            raise ParamOutOfRange(f"比特数必须 >= 1, 实际 {self.n}")

    @cached_property
    def damping_mask(self) -> np.ndarray:
        """逐元素衰减因子矩阵, 对称半正定(高斯核)"""
        sums = _spin_sums(self.n)
        half_diff = (sums[:, None] - sums[None, :]) / 2.0
        return np.exp(-self.lam * half_diff**2)

    def apply_operator(self, operator: ComplexMatrix) -> ComplexMatrix:
        return operator * self.damping_mask

    def to_kraus(self) -> KrausChannel:
        """衰减矩阵 = sum_i mu_i v_i v_i^dag  =>  K_i = sqrt(mu_i) diag(v_i)"""
        eigenvalues, eigenvectors = np.linalg.eigh(self.damping_mask)
        keep = eigenvalues > 1e-14 * eigenvalues.max()
        ops = tuple(
            np.sqrt(mu) * np.diag(eigenvectors[:, i].astype(np.complex128))
            for i, mu in zip(np.flatnonzero(keep), eigenvalues[keep], strict=True)
        )
        logger.debug(f"关联退相位 lam={self.lam} 的 Kraus 秩: {len(ops)}")
        return KrausChannel(ops, name=self.name)


# 关联退相位闭式 chi_F 中的非对角耦合: (行, 列, k 的符号)
_CORRELATED_COUPLINGS: tuple[tuple[str, str, float], ...] = (
    ("XX", "YY", 1.0),
    ("YY", "XX", 1.0),
    ("XY", "YX", -1.0),
    ("YX", "XY", -1.0),
)


def correlated_dephasing(lam: float) -> AffineProcess:
    """两比特关联退相位的闭式仿射映射, a = 0

    对角元: 单个 x/y 的串为 g, 只含 z/I 的串为 1, 两个 x/y 的串为 h;
    xx<->yy 之间耦合 +k, xy<->yx 之间耦合 -k.

    Raises:
        ParamOutOfRange: lam < 0
    """
    params = DephasingParams.from_kick(lam)
    size = 15
    matrix = np.zeros((size, size))
    for index in range(1, size + 1):
        axes = pauli_from_index(index, 2).axes
        coherent = sum(axis in "XY" for axis in axes)
        matrix[index - 1, index - 1] = (1.0, params.g, params.h)[coherent]
    for row, column, sign in _CORRELATED_COUPLINGS:
        matrix[_slot(row), _slot(column)] = sign * params.k
    return AffineProcess(matrix, np.zeros(size))


def _slot(text: str) -> int:
    return pauli_index(PauliString.parse(text)) - 1
