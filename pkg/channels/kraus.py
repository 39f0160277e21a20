"""Kraus 形式的量子通道

rho' = sum_k E_k rho E_k^dag, 完备性 sum_k E_k^dag E_k = I 保证保迹.
通道构造后不可变; 任何带 n / apply_operator / to_kraus 的对象都可以当作通道使用.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Protocol, runtime_checkable

import numpy as np
from loguru import logger

from pauli_fano import DensityMatrix, qubit_count_for_dimension
from shared.constants import KRAUS_COMPLETENESS_TOL, UNITARY_TOL
from shared.errors import DimensionMismatch, IncompleteKraus, NotUnitary
from shared.typing import ComplexMatrix


@runtime_checkable
class QuantumChannel(Protocol):
    """通道协议: 线性作用在任意 2^n x 2^n 矩阵上"""

    @property
    def n(self) -> int: ...

    @property
    def name(self) -> str: ...

    def apply_operator(self, operator: ComplexMatrix) -> ComplexMatrix: ...

    def to_kraus(self) -> KrausChannel: ...


def kraus_completeness(ops: KrausChannel | Sequence[np.ndarray]) -> float:
    """max|sum_k E_k^dag E_k - I|

    Examples:
        {I} -> 0
        {sqrt(0.5) I} -> 0.5
    """
    matrices = ops.ops if isinstance(ops, KrausChannel) else tuple(ops)
    if not matrices:
        raise IncompleteKraus("Kraus 算符列表为空", residual=1.0)
    stack = np.asarray(matrices, dtype=np.complex128)
    total = np.einsum("kji,kjl->il", stack.conj(), stack)
    return float(np.max(np.abs(total - np.eye(stack.shape[1]))))


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """n 比特 Kraus 通道, ops 非空且满足完备性"""

    ops: tuple[ComplexMatrix, ...]
    name: str = "kraus"
    n: int = field(init=False)

    def __post_init__(self) -> None:
        if len(self.ops) == 0:
            raise IncompleteKraus("Kraus 算符列表为空", residual=1.0)
        matrices = tuple(np.array(op, dtype=np.complex128) for op in self.ops)
        shape = matrices[0].shape
        if len(shape) != 2 or shape[0] != shape[1]:
            raise DimensionMismatch(f"Kraus 算符必须是方阵, 实际 {shape}")
        if any(op.shape != shape for op in matrices):
            raise DimensionMismatch("Kraus 算符尺寸不一致")
        n = qubit_count_for_dimension(shape[0])

        residual = kraus_completeness(matrices)
        if residual >= KRAUS_COMPLETENESS_TOL:
            raise IncompleteKraus(
                f"{self.name}: Kraus 完备性残差 {residual:.3e} 超过 {KRAUS_COMPLETENESS_TOL:g}",
                residual=residual,
            )
        for op in matrices:
            op.setflags(write=False)
        object.__setattr__(self, "ops", matrices)
        object.__setattr__(self, "n", n)

    @property
    def rank(self) -> int:
        return len(self.ops)

    def apply_operator(self, operator: ComplexMatrix) -> ComplexMatrix:
        result = np.zeros_like(operator, dtype=np.complex128)
        for op in self.ops:
            result += op @ operator @ op.conj().T
        return result

    def to_kraus(self) -> KrausChannel:
        return self


def apply_channel(channel: QuantumChannel, rho: DensityMatrix) -> DensityMatrix:
    """作用任意通道, 输出再次按 DensityMatrix 不变量校验"""
    if channel.n != rho.n:
        raise DimensionMismatch(f"通道 {channel.n} 比特, 态 {rho.n} 比特")
    return DensityMatrix(channel.apply_operator(rho.data))


def apply_kraus(channel: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """rho' = sum_k E_k rho E_k^dag

    Raises:
        DimensionMismatch: 比特数不一致
        IncompleteKraus: 通道不保迹(构造 KrausChannel 时已检查)
    """
    return apply_channel(channel, rho)


def tensor_channel(first: QuantumChannel, second: QuantumChannel) -> KrausChannel:
    """独立作用的两个通道, first 占高位比特; Kraus 集合为两两张量积"""
    ops_first = first.to_kraus().ops
    ops_second = second.to_kraus().ops
    ops = tuple(np.kron(a, b) for a in ops_first for b in ops_second)
    return KrausChannel(ops, name=f"{first.name}⊗{second.name}")


def identity_channel(n: int) -> KrausChannel:
    return KrausChannel((np.eye(2**n, dtype=np.complex128),), name="identity")


def check_unitary(matrix: np.ndarray, label: str = "U") -> ComplexMatrix:
    """校验幺正性, 返回 complex128 副本

    Raises:
        NotUnitary: 非方阵或 max|U^dag U - I| > UNITARY_TOL
    """
    array = np.array(matrix, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise NotUnitary(f"{label} 不是方阵, 形状 {array.shape}")
    deviation = float(np.max(np.abs(array.conj().T @ array - np.eye(array.shape[0]))))
    if deviation > UNITARY_TOL:
        raise NotUnitary(f"{label} 非幺正: max|U^dag U - I| = {deviation:.3e}")
    return array


def unitary_channel(unitary: np.ndarray, name: str = "unitary") -> KrausChannel:
    """单 Kraus 算符 {U} 的通道"""
    return KrausChannel((check_unitary(unitary),), name=name)


def random_kraus_channel(
    n: int, rank: int, rng: np.random.Generator
) -> KrausChannel:
    """随机 CPTP 通道

    对 (rank*N) x N 复高斯矩阵做 QR 得到等距 V (V^dag V = I),
    按 N 行切块即为 rank 个 Kraus 算符.
    """
    if rank < 1:
        raise ValueError(f"rank 必须 >= 1, 实际 {rank}")
    dim = 2**n
    gaussian = rng.standard_normal((rank * dim, dim)) + 1j * rng.standard_normal(
        (rank * dim, dim)
    )
    isometry, upper = np.linalg.qr(gaussian)
    # 固定 R 对角线相位, 使分布与 QR 实现无关
    phases = np.diag(upper) / np.abs(np.diag(upper))
    isometry = isometry * phases
    ops = tuple(isometry[k * dim : (k + 1) * dim, :] for k in range(rank))
    logger.debug(f"随机 Kraus 通道: n={n}, rank={rank}")
    return KrausChannel(ops, name=f"random_rank{rank}")
