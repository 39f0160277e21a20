# channels/spec.py

"""通道配置文件模型

{"type": "...", "params": {...}, "children": [...]}
kraus / unitary 的矩阵使用 pauli_fano 的 {"n", "re", "im"} 格式.
"""

from __future__ import annotations

from typing import Any, Literal, cast

from loguru import logger
from pydantic import BaseModel, Field, TypeAdapter, ValidationError, model_validator

from channels.dephasing import CorrelatedDephasingChannel
from channels.kraus import (
    KrausChannel,
    QuantumChannel,
    identity_channel,
    tensor_channel,
    unitary_channel,
)
from channels.library import (
    amplitude_damping,
    bit_flip,
    depolarizing,
    phase_flip,
    uncorrelated_dephasing,
)
from pauli_fano import MatrixPayload
from shared.errors import ConfigError

_BOOL = TypeAdapter(bool)

ChannelType = Literal[
    "identity",
    "phase_flip",
    "bit_flip",
    "depolarizing",
    "amplitude_damping",
    "uncorrelated_dephasing",
    "correlated_dephasing",
    "tensor",
    "unitary",
    "kraus",
]


class ChannelSpec(BaseModel):
    """通道描述(递归, tensor 的 children 依次占高位到低位比特)"""

    type: ChannelType = Field(..., description="通道类型")
    params: dict[str, Any] = Field(default_factory=dict, description="通道参数")
    children: list[ChannelSpec] = Field(
        default_factory=lambda: cast(list[ChannelSpec], []),
        description="tensor 的子通道",
    )

    @model_validator(mode="after")
    def _check_children(self) -> ChannelSpec:
        if self.type == "tensor" and len(self.children) < 2:
            raise ValueError("tensor 至少需要两个子通道")
        if self.type != "tensor" and self.children:
            raise ValueError(f"{self.type} 不接受 children")
        return self

    def qubit_count(self) -> int:
        """不构造通道即可推出的比特数"""
        if self.type == "tensor":
            return sum(child.qubit_count() for child in self.children)
        if self.type in {"uncorrelated_dephasing", "correlated_dephasing"}:
            return _qubit_param(self, 2)
        if self.type == "identity":
            return _qubit_param(self, 1)
        try:
            if self.type == "unitary":
                return int(self.params["matrix"]["n"])
            if self.type == "kraus":
                return int(self.params["ops"][0]["n"])
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise ConfigError(f"{self.type} 缺少矩阵或比特数: {exc}") from exc
        return 1


def _qubit_param(spec: ChannelSpec, default: int) -> int:
    raw = spec.params.get("n", default)
    if isinstance(raw, bool) or not isinstance(raw, int) or raw < 1:
        raise ConfigError(f"{spec.type}.n 必须是 >= 1 的整数: {raw!r}")
    return raw


def _strict_flag(spec: ChannelSpec) -> bool:
    try:
        return _BOOL.validate_python(spec.params.get("strict", True))
    except ValidationError as exc:
        raise ConfigError(f"{spec.type}.strict 不是布尔值: {exc}") from exc


def _param(spec: ChannelSpec, key: str) -> Any:
    if key not in spec.params:
        raise ConfigError(f"{spec.type} 缺少参数 {key!r}")
    return spec.params[key]


def _float_param(spec: ChannelSpec, key: str) -> float:
    raw = _param(spec, key)
    try:
        return float(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{spec.type}.{key} 不是数值: {raw!r}") from exc


def _matrix(raw: Any) -> MatrixPayload:
    try:
        return MatrixPayload.model_validate(raw)
    except ValidationError as exc:
        raise ConfigError(f"矩阵格式错误: {exc}") from exc


def channel_from_spec(spec: ChannelSpec) -> QuantumChannel:
    """按配置构造通道

    Raises:
        ConfigError: 缺少参数或矩阵格式错误
        ChannelSpecError: 参数越界、Kraus 不完备或矩阵非幺正
    """
    match spec.type:
        case "identity":
            return identity_channel(_qubit_param(spec, 1))
        case "phase_flip":
            return phase_flip(_float_param(spec, "p"), strict=_strict_flag(spec))
        case "bit_flip":
            return bit_flip(_float_param(spec, "p"), strict=_strict_flag(spec))
        case "depolarizing":
            return depolarizing(_float_param(spec, "p"))
        case "amplitude_damping":
            return amplitude_damping(_float_param(spec, "p"))
        case "uncorrelated_dephasing":
            return uncorrelated_dephasing(
                _float_param(spec, "p"), n=_qubit_param(spec, 2)
            )
        case "correlated_dephasing":
            return CorrelatedDephasingChannel(
                _float_param(spec, "lam"), n=_qubit_param(spec, 2)
            )
        case "unitary":
            return unitary_channel(_matrix(_param(spec, "matrix")).to_array())
        case "kraus":
            ops = tuple(_matrix(raw).to_array() for raw in _param(spec, "ops"))
            if not ops or len({op.shape for op in ops}) != 1:
                raise ConfigError("kraus.ops 必须是非空且尺寸一致的矩阵列表")
            return KrausChannel(ops, name=spec.params.get("name", "kraus"))
        case "tensor":
            channel = channel_from_spec(spec.children[0])
            for child in spec.children[1:]:
                channel = tensor_channel(channel, channel_from_spec(child))
            logger.debug(f"tensor 通道: {channel.name}, {channel.n} 比特")
            return channel
