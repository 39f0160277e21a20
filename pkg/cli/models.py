"""运行配置文件模型

示例:
    {
      "channel": {"type": "phase_flip", "params": {"p": 0.25}},
      "mode": "shots",
      "shots": 10000,
      "seed": 7,
      "out": "results/phase_flip"
    }
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

from channels import ChannelSpec
from measurement_sim.sampling import MAX_SEED
from shared.errors import ConfigError

RunMode = Literal["exact", "shots"]


class RunConfig(BaseModel):
    """一次 qpt / discriminate 运行的全部输入"""

    channel: ChannelSpec = Field(..., description="待测通道")
    n: int | None = Field(None, ge=1, description="比特数, 省略时由通道推出")
    mode: RunMode = Field("exact", description="exact 用精确期望值, shots 做有限次采样")
    shots: int | None = Field(None, ge=1, description="每个 (态, 设置) 的测量次数")
    seed: int = Field(0, ge=0, le=MAX_SEED, description="主随机种子")
    out: str | None = Field(None, description="chi_F 输出路径前缀")
    shots_out: str | None = Field(None, description="计数表 JSON lines 输出路径")

    @model_validator(mode="after")
    def _check_consistency(self) -> RunConfig:
        if self.mode == "shots" and self.shots is None:
            raise ValueError("mode=shots 时必须给出 shots")
        if self.mode == "exact" and self.shots is not None:
            raise ValueError("mode=exact 时不能给出 shots")
        if self.shots_out is not None and self.mode != "shots":
            raise ValueError("shots_out 只在 mode=shots 时有效")
        inferred = self.channel.qubit_count()
        if self.n is None:
            self.n = inferred
        elif self.n != inferred:
            raise ValueError(f"n={self.n} 与通道的 {inferred} 比特不一致")
        return self

    @property
    def qubits(self) -> int:
        return self.n if self.n is not None else self.channel.qubit_count()


def load_run_config(path: Path, overrides: dict[str, Any] | None = None) -> RunConfig:
    """读取 JSON 配置, 命令行覆盖项在校验前合并

    Raises:
        ConfigError: 文件不是 JSON 对象
        ValidationError: 字段不合法
    """
    raw = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: 配置文件顶层必须是 JSON 对象")
    merged = {**raw, **{k: v for k, v in (overrides or {}).items() if v is not None}}
    if overrides and overrides.get("mode") == "exact":
        merged.pop("shots", None)
    return RunConfig.model_validate(merged)
