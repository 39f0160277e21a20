"""线性反演重建: 𝓜 = R' R^{-1}, chi_F = 𝓜 的前 4^n - 1 行"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger

from channels import AffineProcess, QuantumChannel, apply_channel
from pauli_fano import density_to_fano
from shared.constants import LAST_ROW_TOL, POSITIVITY_TOL
from shared.errors import DimensionMismatch
from tomography.basis import PreparationBasis, RMatrix, invert_R
from tomography.choi import min_choi_eigenvalue


@dataclass(frozen=True)
class ReconstructionResult:
    """重建结果与诊断量"""

    process: AffineProcess
    last_row_residual: float
    min_choi_eig: float
    condition_number: float

    @property
    def is_physical(self) -> bool:
        return self.min_choi_eig >= -POSITIVITY_TOL


def exact_output_matrix(channel: QuantumChannel, basis: PreparationBasis) -> RMatrix:
    """shots -> 无穷时的 R': 每列为 E(rho_j) 的精确 Fano 表示"""
    if channel.n != basis.n:
        raise DimensionMismatch(f"通道 {channel.n} 比特, 制备基 {basis.n} 比特")
    columns = [
        density_to_fano(apply_channel(channel, state)).augmented()
        for state in basis.states
    ]
    return RMatrix(np.column_stack(columns))


def reconstruct(
    r_out: RMatrix, r_in: RMatrix, estimated: bool = False
) -> ReconstructionResult:
    """𝓜 = R' R^{-1}

    末行残差 max|𝓜_last - (0,...,0,1)| 只作为质量指标报告; chi_F 取前 4^n-1 行,
    等价于把末行改写为精确的 (0,...,0,1).

    Args:
        r_out: 输出态的 R'
        r_in: 制备基的 R
        estimated: R' 来自有限次测量时为 True, 末行残差超限不告警

    Raises:
        DimensionMismatch: R 与 R' 尺寸不同
        SingularBasis: R 不可逆
    """
    if r_out.n != r_in.n:
        raise DimensionMismatch(f"R' 为 {r_out.n} 比特, R 为 {r_in.n} 比特")
    inverse = invert_R(r_in)
    full = r_out.data @ inverse.data

    expected_last = np.zeros(full.shape[0])
    expected_last[-1] = 1.0
    residual = float(np.max(np.abs(full[-1] - expected_last)))
    if residual >= LAST_ROW_TOL and not estimated:
        logger.warning(f"⚠️ 精确输入的末行残差 {residual:.3e} 超过 {LAST_ROW_TOL:g}")

    process = AffineProcess.from_full(full)
    min_eig = min_choi_eigenvalue(process)
    logger.debug(
        f"重建完成: n={process.n}, 末行残差={residual:.2e}, "
        f"Choi 最小本征值={min_eig:.3e}, cond(R)={r_in.condition_number:.3g}"
    )
    return ReconstructionResult(
        process=process,
        last_row_residual=residual,
        min_choi_eig=min_eig,
        condition_number=r_in.condition_number,
    )
