"""内置噪声通道

单比特: phase_flip, bit_flip, depolarizing, amplitude_damping
两比特: uncorrelated_dephasing (phase_flip 的张量幂), correlated_dephasing
参数严格校验, 越界直接抛 ParamOutOfRange, 不做截断.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from typing import NamedTuple

import numpy as np
from loguru import logger

from channels.dephasing import CorrelatedDephasingChannel
from channels.kraus import KrausChannel, QuantumChannel, tensor_channel
from pauli_fano import PAULI_MATRICES
from shared.errors import ParamOutOfRange

_I = PAULI_MATRICES["I"]
_X = PAULI_MATRICES["X"]
_Y = PAULI_MATRICES["Y"]
_Z = PAULI_MATRICES["Z"]


def _check_probability(name: str, p: float, upper: float) -> float:
    value = float(p)
    if math.isnan(value) or not 0.0 <= value <= upper:
        raise ParamOutOfRange(f"{name}: p 必须在 [0, {upper:g}], 实际 {p}")
    return value


def _flip_channel(name: str, pauli: np.ndarray, p: float, strict: bool) -> KrausChannel:
    value = _check_probability(name, p, 0.5 if strict else 1.0)
    return KrausChannel((np.sqrt(1.0 - value) * _I, np.sqrt(value) * pauli), name=name)


def phase_flip(p: float, strict: bool = True) -> KrausChannel:
    """p Z rho Z + (1-p) rho

    Args:
        p: 翻转概率
        strict: True 时只接受 [0, 0.5]; False 时放宽到 [0, 1] (仍是 CPTP)
    """
    return _flip_channel("phase_flip", _Z, p, strict)


def bit_flip(p: float, strict: bool = True) -> KrausChannel:
    """p X rho X + (1-p) rho"""
    return _flip_channel("bit_flip", _X, p, strict)


def depolarizing(p: float) -> KrausChannel:
    """(1-p) rho + p I/2, Kraus: sqrt(1-3p/4) I, sqrt(p/4) {X, Y, Z}"""
    value = _check_probability("depolarizing", p, 1.0)
    weight = np.sqrt(value / 4.0)
    ops = (np.sqrt(1.0 - 0.75 * value) * _I, weight * _X, weight * _Y, weight * _Z)
    return KrausChannel(ops, name="depolarizing")


def amplitude_damping(p: float) -> KrausChannel:
    """E0 = |0><0| + sqrt(1-p)|1><1|, E1 = sqrt(p)|0><1|"""
    value = _check_probability("amplitude_damping", p, 1.0)
    e0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - value)]], dtype=np.complex128)
    e1 = np.array([[0.0, np.sqrt(value)], [0.0, 0.0]], dtype=np.complex128)
    return KrausChannel((e0, e1), name="amplitude_damping")


def uncorrelated_dephasing(p: float, n: int = 2) -> KrausChannel:
    """每个比特独立经历 phase_flip(p)"""
    if n < 1:
        raise ParamOutOfRange(f"比特数必须 >= 1, 实际 {n}")
    single = phase_flip(p)
    channel = single
    for _ in range(n - 1):
        channel = tensor_channel(channel, single)
    return KrausChannel(channel.ops, name="uncorrelated_dephasing")


def correlated_dephasing_channel(lam: float, n: int = 2) -> CorrelatedDephasingChannel:
    return CorrelatedDephasingChannel(lam, n=n)


class ChannelFamily(NamedTuple):
    name: str
    n: int
    parameter: str
    lower: float
    upper: float
    description: str
    build: Callable[[float], QuantumChannel]


CHANNEL_CATALOGUE: tuple[ChannelFamily, ...] = (
    ChannelFamily("phase_flip", 1, "p", 0.0, 0.5, "p Z rho Z + (1-p) rho", phase_flip),
    ChannelFamily("bit_flip", 1, "p", 0.0, 0.5, "p X rho X + (1-p) rho", bit_flip),
    ChannelFamily(
        "depolarizing", 1, "p", 0.0, 1.0, "(1-p) rho + p I/2", depolarizing
    ),
    ChannelFamily(
        "amplitude_damping", 1, "p", 0.0, 1.0, "向 |0> 衰减", amplitude_damping
    ),
    ChannelFamily(
        "uncorrelated_dephasing",
        2,
        "p",
        0.0,
        0.5,
        "两比特各自 phase_flip(p)",
        uncorrelated_dephasing,
    ),
    ChannelFamily(
        "correlated_dephasing",
        2,
        "lam",
        0.0,
        math.inf,
        "两比特共同随机 R_z 转动, g = exp(-lam)",
        correlated_dephasing_channel,
    ),
)


if __name__ == "__main__":
    for family in CHANNEL_CATALOGUE:
        logger.info(
            f"{family.name:<24} n={family.n} {family.parameter} ∈ "
            f"[{family.lower:g}, {family.upper:g}]  {family.description}"
        )
