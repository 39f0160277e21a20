"""Choi 矩阵与完全正定性诊断

J = (1/N) sum_{alpha,beta} T_{beta alpha} P_alpha^T ⊗ P_beta = sum_ij |i><j| ⊗ E(|i><j|)
T 为带恒等行的完整转移矩阵. 恒等通道 J = N |Phi+><Phi+|.
"""

from __future__ import annotations

import numpy as np
from loguru import logger

from channels import AffineProcess, KrausChannel
from pauli_fano import pauli_basis
from shared.constants import POSITIVITY_TOL
from shared.errors import NotPositive
from shared.typing import ComplexMatrix


def chi_to_choi(proc: AffineProcess) -> ComplexMatrix:
    """由 chi_F 重建 N^2 x N^2 的 Choi 矩阵"""
    basis = pauli_basis(proc.n)
    dim = 2**proc.n
    transfer = proc.full_matrix
    images = np.einsum("ba,bkl->akl", transfer, basis)
    choi = np.einsum("aji,akl->ikjl", basis, images).reshape(dim * dim, dim * dim)
    return choi / dim


def _choi_spectrum(proc: AffineProcess) -> tuple[np.ndarray, np.ndarray]:
    choi = chi_to_choi(proc)
    return np.linalg.eigh((choi + choi.conj().T) / 2)


def min_choi_eigenvalue(proc: AffineProcess) -> float:
    """Choi 矩阵最小本征值, 物理通道应 >= -POSITIVITY_TOL"""
    eigenvalues, _ = _choi_spectrum(proc)
    return float(eigenvalues[0])


def affine_to_kraus(proc: AffineProcess, tol: float = 1e-12) -> KrausChannel:
    """Choi 本征分解得到 Kraus 算符, 本征值 <= tol 的分量丢弃

    Raises:
        NotPositive: 最小本征值 < -POSITIVITY_TOL (映射不是完全正定的)
    """
    eigenvalues, eigenvectors = _choi_spectrum(proc)
    if eigenvalues[0] < -POSITIVITY_TOL:
        raise NotPositive(
            f"Choi 矩阵存在负本征值 {eigenvalues[0]:.3e}, 无法给出 Kraus 形式",
            float(eigenvalues[0]),
        )
    dim = 2**proc.n
    ops = tuple(
        np.sqrt(value) * eigenvectors[:, i].reshape(dim, dim).T
        for i, value in enumerate(eigenvalues)
        if value > tol
    )
    logger.debug(f"Choi 分解: n={proc.n}, Kraus 秩 {len(ops)}")
    return KrausChannel(ops, name="from_affine")
