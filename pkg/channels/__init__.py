"""
量子通道

Kraus 通道、解析退相位通道、张量组合, 以及到 Fano 仿射映射的精确转换.
"""

from .affine import (
    AffineProcess,
    affine_apply,
    channel_to_affine,
    compose_affine,
    identity_process,
)
from .dephasing import (
    CorrelatedDephasingChannel,
    DephasingParams,
    correlated_dephasing,
    rz,
    rz_pair,
)
from .kak import KakParams, entangling_core, kak_compose
from .kraus import (
    KrausChannel,
    QuantumChannel,
    apply_channel,
    apply_kraus,
    check_unitary,
    identity_channel,
    kraus_completeness,
    random_kraus_channel,
    tensor_channel,
    unitary_channel,
)
from .library import (
    CHANNEL_CATALOGUE,
    ChannelFamily,
    amplitude_damping,
    bit_flip,
    correlated_dephasing_channel,
    depolarizing,
    phase_flip,
    uncorrelated_dephasing,
)
from .spec import ChannelSpec, channel_from_spec

__all__ = [
    "CHANNEL_CATALOGUE",
    "AffineProcess",
    "ChannelFamily",
    "ChannelSpec",
    "CorrelatedDephasingChannel",
    "DephasingParams",
    "KakParams",
    "KrausChannel",
    "QuantumChannel",
    "affine_apply",
    "amplitude_damping",
    "apply_channel",
    "apply_kraus",
    "bit_flip",
    "channel_from_spec",
    "channel_to_affine",
    "check_unitary",
    "compose_affine",
    "correlated_dephasing",
    "correlated_dephasing_channel",
    "depolarizing",
    "entangling_core",
    "identity_channel",
    "identity_process",
    "kak_compose",
    "kraus_completeness",
    "phase_flip",
    "random_kraus_channel",
    "rz",
    "rz_pair",
    "tensor_channel",
    "uncorrelated_dephasing",
    "unitary_channel",
]
