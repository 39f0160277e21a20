"""关联 / 非关联退相位的区分

初态 |+>|+> (c_xx = 1, c_yy = 0) 经过通道后:
    关联:   c_xx' = h, c_yy' = k, 因此 c_xx' + c_yy' = 1, g = (c_xx' - c_yy')^(1/4)
    非关联: c_xx' = g^2, c_yy' = 0, g = sqrt(c_xx')
无噪声 (g = 1) 时两种模型给出相同结果, 判为 inconclusive.
"""

from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, Field

from shared.constants import DEFAULT_SIGMA_LEVEL, EXACT_DISCRIMINATION_TOL
from shared.errors import InputOutOfRange

_RANGE_SLACK = 1e-9


class DephasingClass(str, Enum):
    CORRELATED = "correlated"
    UNCORRELATED = "uncorrelated"
    INCONCLUSIVE = "inconclusive"


class DiscriminationResult(BaseModel):
    classification: DephasingClass = Field(..., description="判定结果")
    g_hat: float | None = Field(None, description="估计的 g")
    g_stderr: float | None = Field(None, description="g 的标准误差")
    tol_sum: float = Field(..., description="c_xx + c_yy = 1 检验使用的容差")
    tol_yy: float = Field(..., description="c_yy = 0 检验使用的容差")
    c_xx: float = Field(..., description="输入 c_xx'")
    c_yy: float = Field(..., description="输入 c_yy'")


def _check_input(name: str, value: float) -> None:
    if math.isnan(value) or abs(value) > 1.0 + _RANGE_SLACK:
        raise InputOutOfRange(f"{name} 必须在 [-1, 1], 实际 {value}")


def _tolerances(
    stderr_xx: float | None,
    stderr_yy: float | None,
    tolerance: float | None,
    n_sigma: float,
) -> tuple[float, float]:
    if tolerance is not None:
        if not tolerance > 0:
            raise InputOutOfRange(f"容差必须为正, 实际 {tolerance}")
        return tolerance, tolerance
    if stderr_xx is None or stderr_yy is None:
        return EXACT_DISCRIMINATION_TOL, EXACT_DISCRIMINATION_TOL
    # 零方差(如 c = ±1)时保留精确模式的下限
    tol_sum = max(n_sigma * math.hypot(stderr_xx, stderr_yy), EXACT_DISCRIMINATION_TOL)
    tol_yy = max(n_sigma * stderr_yy, EXACT_DISCRIMINATION_TOL)
    return tol_sum, tol_yy


def dephasing_discriminator(
    c_xx: float,
    c_yy: float,
    stderr_xx: float | None = None,
    stderr_yy: float | None = None,
    tolerance: float | None = None,
    n_sigma: float = DEFAULT_SIGMA_LEVEL,
) -> DiscriminationResult:
    """根据 c_xx', c_yy' 判定退相位类型并估计 g

    Args:
        c_xx: 输出态的 c_xx
        c_yy: 输出态的 c_yy
        stderr_xx: c_xx 的标准误差, 与 stderr_yy 同时给出时容差取 n_sigma 倍
        stderr_yy: c_yy 的标准误差
        tolerance: 显式容差, 优先于标准误差
        n_sigma: 统计模式下的置信倍数

    Raises:
        InputOutOfRange: 输入超出 [-1, 1] 或容差非正
    """
    _check_input("c_xx", c_xx)
    _check_input("c_yy", c_yy)
    tol_sum, tol_yy = _tolerances(stderr_xx, stderr_yy, tolerance, n_sigma)
    combined = (
        math.hypot(stderr_xx, stderr_yy)
        if stderr_xx is not None and stderr_yy is not None
        else None
    )

    def result(
        label: DephasingClass, g_hat: float | None, g_err: float | None
    ) -> DiscriminationResult:
        return DiscriminationResult(
            classification=label,
            g_hat=g_hat,
            g_stderr=g_err,
            tol_sum=tol_sum,
            tol_yy=tol_yy,
            c_xx=c_xx,
            c_yy=c_yy,
        )

    if abs(c_xx - 1.0) <= tol_sum and abs(c_yy) <= tol_yy:
        return result(DephasingClass.INCONCLUSIVE, 1.0, None)

    if abs(c_xx + c_yy - 1.0) <= tol_sum and c_yy > tol_yy:
        difference = max(c_xx - c_yy, 0.0)
        g_hat = difference**0.25
        g_err = None
        if combined is not None and difference > 0:
            g_err = 0.25 * difference**-0.75 * combined
        return result(DephasingClass.CORRELATED, g_hat, g_err)

    if abs(c_yy) <= tol_yy:
        g_hat = math.sqrt(max(c_xx, 0.0))
        g_err = None
        if combined is not None and stderr_xx is not None and g_hat > 0:
            g_err = stderr_xx / (2.0 * g_hat)
        return result(DephasingClass.UNCORRELATED, g_hat, g_err)

    return result(DephasingClass.INCONCLUSIVE, None, None)
