# measurement_sim/shot_io.py

"""计数表的 JSON lines 导入导出

每行一个对象: {"state": i, "setting": "XY", "shots": s, "counts": {"01": k}, "seed": u64}
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from measurement_sim.sampling import MAX_SEED, ShotTable
from measurement_sim.settings import MeasurementSetting
from shared.errors import ConfigError


class ShotRecord(BaseModel):
    """单行计数记录"""

    state: int = Field(..., ge=0, description="制备态序号")
    setting: str = Field(..., min_length=1, description="测量设置, 如 XY")
    shots: int = Field(..., ge=1, description="测量次数")
    counts: dict[str, int] = Field(..., description="结果串 -> 计数")
    seed: int = Field(..., ge=0, le=MAX_SEED, description="主随机种子")

    def to_table(self) -> ShotTable:
        return ShotTable(
            setting=MeasurementSetting.parse(self.setting),
            shots=self.shots,
            counts=dict(sorted(self.counts.items())),
            seed=self.seed,
            state=self.state,
        )

    @classmethod
    def from_table(cls, table: ShotTable) -> ShotRecord:
        return cls(
            state=table.state,
            setting=str(table.setting),
            shots=table.shots,
            counts=dict(sorted(table.counts.items())),
            seed=table.seed,
        )


def write_shot_tables(tables: Iterable[ShotTable], path: Path) -> int:
    """写出 JSON lines, 返回行数"""
    lines = [ShotRecord.from_table(table).model_dump_json() for table in tables]
    path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    return len(lines)


def read_shot_tables(path: Path) -> list[ShotTable]:
    """读取 JSON lines; 任何一行不合法都视为配置错误"""
    tables: list[ShotTable] = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            tables.append(ShotRecord.model_validate_json(line).to_table())
        except (ValidationError, ValueError) as exc:
            raise ConfigError(f"{path}:{number} 计数记录非法: {exc}") from exc
    return tables
