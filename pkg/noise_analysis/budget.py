"""噪声参数计数

弱局域噪声: 每个比特 12 个局域参数, 每对比特 3 个串扰角度 (KAK 的 tx, ty, tz),
N = 12n + 3n(n-1)/2; 通用过程矩阵需要 N^4 - N^2 = 16^n - 4^n 个参数.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

LOCAL_PARAMETERS_PER_QUBIT = 12
CROSSTALK_PARAMETERS_PER_PAIR = 3


class ParameterCount(BaseModel):
    n: int = Field(..., ge=1, description="比特数")
    physical: int = Field(..., description="弱局域噪声参数个数")
    generic: int = Field(..., description="通用 chi_F 参数个数 16^n - 4^n")


class NoiseBudget(BaseModel):
    """弱局域噪声参数预算"""

    n: int = Field(..., ge=1, description="比特数")
    symmetric: bool = Field(False, description="各比特局域噪声相同")
    local: int = Field(..., description="局域参数个数")
    crosstalk: int = Field(..., description="串扰参数个数")
    total: int = Field(..., description="local + crosstalk")
    generic: int = Field(..., description="通用 chi_F 参数个数")


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"比特数必须 >= 1, 实际 {n}")


def generic_parameter_count(n: int) -> int:
    """N^4 - N^2, 即 chi_F 的元素个数"""
    _check_n(n)
    return 16**n - 4**n


def weak_local_budget(n: int, symmetric: bool = False) -> NoiseBudget:
    """
    Examples:
        n=2 -> local 24, crosstalk 3, total 27, generic 240
        n=2, symmetric -> total 15
        n=3 -> local 36, crosstalk 9, total 45
    """
    _check_n(n)
    local = LOCAL_PARAMETERS_PER_QUBIT * (1 if symmetric else n)
    crosstalk = CROSSTALK_PARAMETERS_PER_PAIR * n * (n - 1) // 2
    return NoiseBudget(
        n=n,
        symmetric=symmetric,
        local=local,
        crosstalk=crosstalk,
        total=local + crosstalk,
        generic=generic_parameter_count(n),
    )


def parameter_count(n: int, symmetric: bool = False) -> ParameterCount:
    budget = weak_local_budget(n, symmetric)
    return ParameterCount(n=n, physical=budget.total, generic=budget.generic)
