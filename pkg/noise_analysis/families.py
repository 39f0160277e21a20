"""各噪声族 chi_F 的闭式表达(单参数)"""

from __future__ import annotations

import math
from collections.abc import Callable
from typing import NamedTuple

import numpy as np

from channels import AffineProcess, correlated_dephasing
from pauli_fano import all_pauli_strings


def phase_flip_model(p: float) -> AffineProcess:
    g = 1.0 - 2.0 * p
    return AffineProcess(np.diag([g, g, 1.0]), np.zeros(3))


def bit_flip_model(p: float) -> AffineProcess:
    g = 1.0 - 2.0 * p
    return AffineProcess(np.diag([1.0, g, g]), np.zeros(3))


def depolarizing_model(p: float) -> AffineProcess:
    return AffineProcess((1.0 - p) * np.eye(3), np.zeros(3))


def amplitude_damping_model(p: float) -> AffineProcess:
    shrink = math.sqrt(max(0.0, 1.0 - p))
    return AffineProcess(np.diag([shrink, shrink, 1.0 - p]), np.array([0.0, 0.0, p]))


def uncorrelated_dephasing_model(p: float) -> AffineProcess:
    """c'_{a1 a2} = g^{m1 + m2} c_{a1 a2}, m_i = 1 当且仅当 a_i 为 x 或 y"""
    g = 1.0 - 2.0 * p
    exponents = [
        sum(axis in "XY" for axis in s.axes) for s in all_pauli_strings(2)[:-1]
    ]
    return AffineProcess(np.diag([g**m for m in exponents]), np.zeros(15))


class FitFamily(NamedTuple):
    name: str
    n: int
    parameter: str
    lower: float
    upper: float
    model: Callable[[float], AffineProcess]
    grid: Callable[[], np.ndarray]


def _uniform_grid(lower: float, upper: float) -> Callable[[], np.ndarray]:
    return lambda: np.linspace(lower, upper, 401)


def _kick_grid() -> np.ndarray:
    # lam 较大时 g^4 已接近 0, 用对数网格覆盖尾部
    dense = np.linspace(0.0, 2.0, 401)
    tail = np.geomspace(2.0, 50.0, 60)
    return np.unique(np.concatenate([dense, tail]))


FIT_FAMILIES: tuple[FitFamily, ...] = (
    FitFamily(
        "phase_flip", 1, "p", 0.0, 0.5, phase_flip_model, _uniform_grid(0.0, 0.5)
    ),
    FitFamily(
        "bit_flip", 1, "p", 0.0, 0.5, bit_flip_model, _uniform_grid(0.0, 0.5)
    ),
    FitFamily(
        "depolarizing", 1, "p", 0.0, 1.0, depolarizing_model, _uniform_grid(0.0, 1.0)
    ),
    FitFamily(
        "amplitude_damping",
        1,
        "p",
        0.0,
        1.0,
        amplitude_damping_model,
        _uniform_grid(0.0, 1.0),
    ),
    FitFamily(
        "uncorrelated_dephasing",
        2,
        "p",
        0.0,
        0.5,
        uncorrelated_dephasing_model,
        _uniform_grid(0.0, 0.5),
    ),
    FitFamily(
        "correlated_dephasing", 2, "lam", 0.0, 50.0, correlated_dephasing, _kick_grid
    ),
)


def get_fit_family(name: str) -> FitFamily:
    for family in FIT_FAMILIES:
        if family.name == name:
            return family
    known = ", ".join(f.name for f in FIT_FAMILIES)
    raise ValueError(f"未知拟合族: {name} (可选: {known})")
