"""密度矩阵与 Fano 向量

rho = (1/N) sum_alpha c_alpha P_alpha,  c_alpha = Tr(P_alpha rho),  N = 2^n.
全 I 系数恒为 1, 不进入广义 Bloch 向量 b.
两个类型构造后不可变, 所有转换都是纯函数.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field

import numpy as np

from pauli_fano.pauli import (
    pauli_basis,
    qubit_count_for_dimension,
    qubit_count_for_fano_length,
)
from shared.constants import (
    HERMITIAN_TOL,
    IMAGINARY_TOL,
    POSITIVITY_TOL,
    TRACE_TOL,
)
from shared.errors import InvalidState, NonHermitianInput, NotPositive
from shared.typing import ComplexMatrix, RealVector

# Fano 系数允许的越界量(浮点误差)
FANO_RANGE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """2^n x 2^n 厄米、迹 1、半正定的复矩阵

    统计估计得到的矩阵可以通过 InitVar 放宽容差;
    positivity_tol=inf 表示跳过正定性检查.
    """

    data: ComplexMatrix
    hermitian_tol: InitVar[float] = HERMITIAN_TOL
    trace_tol: InitVar[float] = TRACE_TOL
    positivity_tol: InitVar[float] = POSITIVITY_TOL
    n: int = field(init=False)

    def __post_init__(
        self, hermitian_tol: float, trace_tol: float, positivity_tol: float
    ) -> None:
        matrix = np.array(self.data, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidState(f"密度矩阵必须是方阵, 实际形状 {matrix.shape}")
        n = qubit_count_for_dimension(matrix.shape[0])

        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T)))
        if asymmetry > hermitian_tol:
            raise NonHermitianInput(f"密度矩阵非厄米: max|rho - rho^dag| = {asymmetry:.3e}")

        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > trace_tol:
            raise InvalidState(f"密度矩阵迹不为 1: Tr = {trace}")

        if np.isfinite(positivity_tol):
            min_eig = float(np.linalg.eigvalsh(matrix).min())
            if min_eig < -positivity_tol:
                raise NotPositive(f"密度矩阵存在负本征值 {min_eig:.3e}", min_eig)

        matrix.setflags(write=False)
        object.__setattr__(self, "data", matrix)
        object.__setattr__(self, "n", n)

    @property
    def dim(self) -> int:
        return 2**self.n

    def purity(self) -> float:
        return float(np.real(np.trace(self.data @ self.data)))


@dataclass(frozen=True, eq=False)
class FanoVector:
    """广义 Bloch 向量 b, 长度 4^n - 1, 顺序见 pauli_index"""

    b: RealVector
    n: int = field(init=False)

    def __post_init__(self) -> None:
        vector = np.array(self.b, dtype=np.float64)
        if vector.ndim != 1:
            raise InvalidState(f"Fano 向量必须是一维, 实际形状 {vector.shape}")
        n = qubit_count_for_fano_length(vector.shape[0])
        if not np.all(np.isfinite(vector)):
            raise InvalidState("Fano 向量包含 NaN/inf")
        overshoot = float(np.max(np.abs(vector))) - 1.0
        if overshoot > FANO_RANGE_TOL:
            raise InvalidState(f"Fano 系数超出 [-1, 1]: max|b| = {1.0 + overshoot}")
        vector.setflags(write=False)
        object.__setattr__(self, "b", vector)
        object.__setattr__(self, "n", n)

    def augmented(self) -> RealVector:
        """带末尾 1 的 [b; 1], 即 R 矩阵的一列"""
        return np.append(self.b, 1.0)

    def norm_squared(self) -> float:
        return float(self.b @ self.b)


def density_to_fano(rho: DensityMatrix) -> FanoVector:
    """c_alpha = Tr(P_alpha rho), 去掉全 I 分量

    Raises:
        NonHermitianInput: 某个系数虚部 >= IMAGINARY_TOL
    """
    basis = pauli_basis(rho.n)[:-1]
    coefficients = np.einsum("aij,ji->a", basis, rho.data)
    imag = float(np.max(np.abs(coefficients.imag)))
    if imag >= IMAGINARY_TOL:
        raise NonHermitianInput(f"Fano 系数虚部过大: {imag:.3e}")
    return FanoVector(coefficients.real)


def fano_matrix(v: FanoVector) -> ComplexMatrix:
    """(1/N)(I + sum b_alpha P_alpha), 不做物理性检查"""
    basis = pauli_basis(v.n)
    dim = 2**v.n
    matrix = np.einsum("a,aij->ij", v.b, basis[:-1]) + basis[-1]
    return matrix / dim


def fano_to_density(v: FanoVector, force: bool = False) -> DensityMatrix:
    """由 Fano 向量重建密度矩阵

    Args:
        v: Fano 向量
        force: True 时跳过正定性检查, 返回原始矩阵(层析估计值可能轻微非物理)

    Raises:
        NotPositive: 结果存在 < -POSITIVITY_TOL 的本征值且未 force
    """
    positivity_tol = float("inf") if force else POSITIVITY_TOL
    return DensityMatrix(fano_matrix(v), positivity_tol=positivity_tol)


def pure_state(ket: np.ndarray) -> DensityMatrix:
    """由(未必归一的)态矢量构造 |psi><psi|"""
    vector = np.asarray(ket, dtype=np.complex128).reshape(-1)
    norm = np.linalg.norm(vector)
    if norm == 0:
        raise InvalidState("零向量不能构成量子态")
    vector = vector / norm
    return DensityMatrix(np.outer(vector, vector.conj()))


def tensor_states(*states: DensityMatrix) -> DensityMatrix:
    """rho_1 ⊗ rho_2 ⊗ ..., 第一个参数为比特 1"""
    if not states:
        raise InvalidState("至少需要一个量子态")
    matrix = states[0].data
    for state in states[1:]:
        matrix = np.kron(matrix, state.data)
    return DensityMatrix(matrix)


def random_density_matrix(
    n: int, rng: np.random.Generator, rank: int | None = None
) -> DensityMatrix:
    """Ginibre 随机态: G G^dag / Tr, rank 默认满秩"""
    dim = 2**n
    columns = dim if rank is None else rank
    ginibre = rng.standard_normal((dim, columns)) + 1j * rng.standard_normal(
        (dim, columns)
    )
    matrix = ginibre @ ginibre.conj().T
    matrix = matrix / np.trace(matrix)
    # 消除乘法带来的 1e-17 级非厄米
    return DensityMatrix((matrix + matrix.conj().T) / 2)
