"""单参数噪声族拟合与模型选择

每个族: 粗网格扫描 -> 有界 Brent 细化 -> 最小二乘抛光, 取三者中残差最小者.
残差统一用最大元素偏差 max|chi_F - chi_model|.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.optimize import least_squares, minimize_scalar

from channels import AffineProcess
from noise_analysis.families import FIT_FAMILIES, FitFamily, get_fit_family
from shared.constants import FIT_TIE_TOL
from shared.errors import WrongDimension


class ChannelFit(BaseModel):
    """单个噪声族的拟合结果"""

    family: str = Field(..., description="噪声族名称")
    parameter: str = Field(..., description="参数名, p 或 lam")
    param: float = Field(..., description="拟合参数")
    residual: float = Field(..., ge=0.0, description="max|chi_F - chi_model|")


class ModelSelection(BaseModel):
    """全部族的拟合结果, best 为残差最小者"""

    fits: list[ChannelFit] = Field(..., description="按残差升序")
    best: str | None = Field(None, description="残差最小的族")
    ambiguous: bool = Field(False, description="最小残差在 1e-12 内并列")
    tied: list[str] = Field(default_factory=list, description="并列最小的族")


def _max_residual(
    chi: np.ndarray, model: Callable[[float], AffineProcess]
) -> Callable[[float], float]:
    def residual(x: float) -> float:
        return float(np.max(np.abs(model(float(x)).chi - chi)))

    return residual


def fit_channel(proc: AffineProcess, family: str | FitFamily) -> ChannelFit:
    """对单个噪声族做一维最小二乘拟合

    Raises:
        WrongDimension: chi_F 比特数与噪声族不一致
    """
    spec = get_fit_family(family) if isinstance(family, str) else family
    if proc.n != spec.n:
        raise WrongDimension(f"{spec.name} 需要 {spec.n} 比特 chi_F, 实际 {proc.n} 比特")
    chi = proc.chi
    residual = _max_residual(chi, spec.model)

    grid = spec.grid()
    grid_residuals = np.array([residual(x) for x in grid])
    best_index = int(np.argmin(grid_residuals))
    candidates = [(float(grid_residuals[best_index]), float(grid[best_index]))]

    low = float(grid[max(best_index - 1, 0)])
    high = float(grid[min(best_index + 1, len(grid) - 1)])
    if high > low:
        bounded = minimize_scalar(
            residual, bounds=(low, high), method="bounded", options={"xatol": 1e-12}
        )
        candidates.append((residual(bounded.x), float(bounded.x)))

    # Brent 的精度受 sqrt(eps) 限制, 再用光滑的平方和目标抛光
    start = min(candidates)[1]
    polished = least_squares(
        lambda x: (spec.model(float(x[0])).chi - chi).ravel(),
        x0=[start],
        bounds=([spec.lower], [spec.upper]),
        xtol=1e-15,
        ftol=1e-15,
        gtol=1e-15,
    )
    value = float(np.clip(polished.x[0], spec.lower, spec.upper))
    candidates.append((residual(value), value))

    best_residual, best_param = min(candidates)
    logger.debug(
        f"拟合 {spec.name}: {spec.parameter}={best_param:.12g}, 残差={best_residual:.3e}"
    )
    return ChannelFit(
        family=spec.name,
        parameter=spec.parameter,
        param=best_param,
        residual=best_residual,
    )


def fit_all(proc: AffineProcess) -> ModelSelection:
    """拟合所有比特数匹配的族, 标记最小残差; 1e-12 内并列视为不可区分"""
    fits = sorted(
        (fit_channel(proc, family) for family in FIT_FAMILIES if family.n == proc.n),
        key=lambda fit: fit.residual,
    )
    if not fits:
        return ModelSelection(fits=[])
    floor = fits[0].residual
    tied = [fit.family for fit in fits if fit.residual - floor <= FIT_TIE_TOL]
    ambiguous = len(tied) > 1
    return ModelSelection(
        fits=fits,
        best=None if ambiguous else fits[0].family,
        ambiguous=ambiguous,
        tied=tied if ambiguous else [],
    )
