"""chi_F 的文件格式

JSON: {"n", "M", "a", "last_row_residual", "min_choi_eig"}
CSV:  行列都以 Pauli 标签标注, 最后一列为 "a", 17 位有效数字
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, model_validator

from channels import AffineProcess
from pauli_fano import pauli_labels
from shared.constants import CSV_SIGNIFICANT_DIGITS
from shared.errors import ConfigError
from tomography.choi import min_choi_eigenvalue
from tomography.reconstruct import ReconstructionResult


class ProcessPayload(BaseModel):
    """chi_F JSON 文件"""

    n: int = Field(..., ge=1, description="比特数")
    M: list[list[float]] = Field(..., description="(4^n-1)x(4^n-1) 矩阵")
    a: list[float] = Field(..., description="平移向量")
    last_row_residual: float = Field(0.0, ge=0.0, description="重建末行残差")
    min_choi_eig: float | None = Field(None, description="Choi 最小本征值")

    @model_validator(mode="after")
    def _check_shape(self) -> ProcessPayload:
        size = 4**self.n - 1
        if len(self.M) != size or any(len(row) != size for row in self.M):
            raise ValueError(f"M 尺寸必须为 {size}x{size} (n={self.n})")
        if len(self.a) != size:
            raise ValueError(f"a 长度必须为 {size} (n={self.n})")
        return self

    def to_process(self) -> AffineProcess:
        return AffineProcess(np.array(self.M), np.array(self.a))


def _payload(source: AffineProcess | ReconstructionResult) -> ProcessPayload:
    if isinstance(source, ReconstructionResult):
        proc = source.process
        residual, min_eig = source.last_row_residual, source.min_choi_eig
    else:
        proc = source
        residual, min_eig = 0.0, min_choi_eigenvalue(source)
    return ProcessPayload(
        n=proc.n,
        M=proc.M.tolist(),
        a=proc.a.tolist(),
        last_row_residual=residual,
        min_choi_eig=min_eig,
    )


def process_to_json(source: AffineProcess | ReconstructionResult) -> str:
    return _payload(source).model_dump_json(indent=2)


def process_from_json(text: str) -> ProcessPayload:
    """解析 chi_F JSON, 格式错误抛 pydantic ValidationError"""
    return ProcessPayload.model_validate_json(text)


def process_to_frame(proc: AffineProcess) -> pd.DataFrame:
    labels = pauli_labels(proc.n)
    return pd.DataFrame(proc.chi, index=labels, columns=[*labels, "a"])


def process_to_csv(proc: AffineProcess, path: Path | None = None) -> str:
    """写出 [M | a] CSV; path 为 None 时只返回文本"""
    text = process_to_frame(proc).to_csv(
        float_format=f"%.{CSV_SIGNIFICANT_DIGITS}g", lineterminator="\n"
    )
    if path is not None:
        path.write_text(text, encoding="utf-8")
    return text


def process_from_csv(path: Path) -> AffineProcess:
    """读取 process_to_csv 的输出, 标签必须与 pauli_index 顺序一致"""
    frame = pd.read_csv(path, index_col=0)
    size = frame.shape[0]
    n = max(1, (size + 1).bit_length() // 2)
    expected = pauli_labels(n)
    if list(frame.index) != expected or list(frame.columns) != [*expected, "a"]:
        raise ConfigError(f"{path}: CSV 行列标签不是 {n} 比特的 Pauli 标签")
    return AffineProcess.from_chi(frame.to_numpy(dtype=np.float64))


def load_process(path: Path) -> AffineProcess:
    """按后缀读取 chi_F 文件 (.json / .csv)"""
    if path.suffix.lower() == ".csv":
        return process_from_csv(path)
    return process_from_json(path.read_text(encoding="utf-8")).to_process()
