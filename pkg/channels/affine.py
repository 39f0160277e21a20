"""Fano 基下的仿射映射

[b'; 1] = 𝓜 [b; 1],  𝓜 = [[M, a], [0, 1]],  chi_F = [M | a].
完整的 4^n x 4^n 矩阵 𝓜 即 Pauli 转移矩阵, 行列顺序同 pauli_index (全 I 在最后).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from channels.kraus import QuantumChannel
from pauli_fano import FanoVector, pauli_basis, qubit_count_for_fano_length
from shared.constants import IMAGINARY_TOL
from shared.errors import DimensionMismatch, NonHermitianInput
from shared.typing import RealMatrix, RealVector


@dataclass(frozen=True, eq=False)
class AffineProcess:
    """chi_F = [M | a], M 为 (4^n-1)x(4^n-1), a 长度 4^n-1"""

    M: RealMatrix
    a: RealVector
    n: int = field(init=False)

    def __post_init__(self) -> None:
        matrix = np.array(self.M, dtype=np.float64)
        offset = np.array(self.a, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatch(f"M 必须是方阵, 实际 {matrix.shape}")
        n = qubit_count_for_fano_length(matrix.shape[0])
        if offset.shape != (matrix.shape[0],):
            raise DimensionMismatch(f"a 长度应为 {matrix.shape[0]}, 实际 {offset.shape}")
        matrix.setflags(write=False)
        offset.setflags(write=False)
        object.__setattr__(self, "M", matrix)
        object.__setattr__(self, "a", offset)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_full(cls, full: np.ndarray) -> AffineProcess:
        """从 4^n x 4^n 的 𝓜 取前 4^n-1 行; 最后一行不检查"""
        array = np.asarray(full, dtype=np.float64)
        return cls(array[:-1, :-1], array[:-1, -1])

    @classmethod
    def from_chi(cls, chi: np.ndarray) -> AffineProcess:
        array = np.asarray(chi, dtype=np.float64)
        if array.ndim != 2 or array.shape[1] != array.shape[0] + 1:
            raise DimensionMismatch(f"chi_F 形状应为 (d, d+1), 实际 {array.shape}")
        return cls(array[:, :-1], array[:, -1])

    @property
    def chi(self) -> RealMatrix:
        """[M | a]"""
        return np.column_stack([self.M, self.a])

    @property
    def full_matrix(self) -> RealMatrix:
        """𝓜, 最后一行严格为 (0, ..., 0, 1)"""
        size = self.M.shape[0] + 1
        full = np.zeros((size, size))
        full[:-1, :] = self.chi
        full[-1, -1] = 1.0
        return full

    @property
    def is_unital(self) -> bool:
        return not np.any(self.a)


def identity_process(n: int) -> AffineProcess:
    size = 4**n - 1
    return AffineProcess(np.eye(size), np.zeros(size))


def affine_apply(proc: AffineProcess, v: FanoVector) -> FanoVector:
    """b' = M b + a

    Raises:
        DimensionMismatch: 比特数不一致
    """
    if proc.n != v.n:
        raise DimensionMismatch(f"映射 {proc.n} 比特, 向量 {v.n} 比特")
    return FanoVector(proc.M @ v.b + proc.a)


def compose_affine(outer: AffineProcess, inner: AffineProcess) -> AffineProcess:
    """先 inner 后 outer: 𝓜 = 𝓜_outer 𝓜_inner"""
    if outer.n != inner.n:
        raise DimensionMismatch(f"无法复合 {outer.n} 比特与 {inner.n} 比特映射")
    return AffineProcess(outer.M @ inner.M, outer.M @ inner.a + outer.a)


def channel_to_affine(channel: QuantumChannel) -> AffineProcess:
    """精确仿射映射, 与层析无关的参考值

    T_{beta alpha} = Tr(P_beta E(P_alpha)) / N, alpha 取遍全部 4^n 个 Pauli 串,
    最后一列(alpha = 全 I)即 a.

    Args:
        channel: 任意实现 QuantumChannel 协议的通道
    """
    basis = pauli_basis(channel.n)
    dim = 2**channel.n
    images = np.stack([channel.apply_operator(p) for p in basis])
    transfer = np.einsum("bij,aji->ba", basis, images) / dim
    imag = float(np.max(np.abs(transfer.imag)))
    if imag >= IMAGINARY_TOL:
        raise NonHermitianInput(f"通道不保持厄米性: 转移矩阵虚部 {imag:.3e}")
    logger.debug(
        f"{channel.name}: 转移矩阵末行残差 "
        f"{np.max(np.abs(transfer.real[-1] - np.eye(4**channel.n)[-1])):.2e}"
    )
    return AffineProcess.from_full(transfer.real)
