"""chi_F 的几何解读与弱噪声叠加"""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from channels import AffineProcess, identity_process
from shared.errors import DimensionMismatch, WrongDimension


class BlochEllipsoid(NamedTuple):
    """单比特通道把 Bloch 球映成的椭球"""

    semi_axes: np.ndarray  # M 的奇异值, 降序
    axes: np.ndarray  # 列为对应的主轴方向
    center: np.ndarray  # 即 a


def bloch_ellipsoid(proc: AffineProcess) -> BlochEllipsoid:
    """b' = M b + a 把单位球映成以 a 为中心、半轴为 M 奇异值的椭球

    Raises:
        WrongDimension: 不是单比特过程
    """
    if proc.n != 1:
        raise WrongDimension(f"Bloch 椭球只对单比特定义, 实际 {proc.n} 比特")
    left, singular, _ = np.linalg.svd(proc.M)
    return BlochEllipsoid(semi_axes=singular, axes=left, center=proc.a.copy())


def superpose_weak_noise(processes: Sequence[AffineProcess]) -> AffineProcess:
    """弱噪声一阶近似: chi_F ≈ 恒等 + sum_i (chi_F,i - 恒等)

    Raises:
        DimensionMismatch: 比特数不一致
    """
    if not processes:
        raise ValueError("至少需要一个过程")
    n = processes[0].n
    if any(proc.n != n for proc in processes):
        raise DimensionMismatch("叠加的过程比特数不一致")
    identity = identity_process(n).chi
    total = identity + sum(
        (proc.chi - identity for proc in processes), np.zeros_like(identity)
    )
    return AffineProcess.from_chi(total)
