# pauli_fano/io.py

"""矩阵与 Fano 向量的 JSON 交换格式

复矩阵: {"n": int, "re": [[...]], "im": [[...]]}
Fano 向量: {"n": int, "b": [...]}, 顺序见 pauli_index
浮点数按 repr 写出(17 位有效数字).
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, Field, model_validator

from pauli_fano.states import FanoVector
from shared.errors import DimensionMismatch
from shared.typing import ComplexMatrix


class MatrixPayload(BaseModel):
    """复矩阵的实部/虚部分离表示"""

    n: int = Field(..., ge=1, description="比特数, 矩阵为 2^n x 2^n")
    re: list[list[float]] = Field(..., description="实部, 行优先")
    im: list[list[float]] | None = Field(None, description="虚部, 缺省视为 0")

    @model_validator(mode="after")
    def _check_shape(self) -> MatrixPayload:
        dim = 2**self.n
        rows = [self.re] if self.im is None else [self.re, self.im]
        for part in rows:
            if len(part) != dim or any(len(row) != dim for row in part):
                raise ValueError(f"矩阵尺寸必须为 {dim}x{dim} (n={self.n})")
        return self

    def to_array(self) -> ComplexMatrix:
        real = np.array(self.re, dtype=np.float64)
        imag = np.zeros_like(real) if self.im is None else np.array(self.im)
        return real + 1j * imag

    @classmethod
    def from_array(cls, matrix: np.ndarray) -> MatrixPayload:
        array = np.asarray(matrix, dtype=np.complex128)
        dim = array.shape[0]
        n = dim.bit_length() - 1
        if array.shape != (dim, dim) or 2**n != dim:
            raise DimensionMismatch(f"无法序列化形状 {array.shape} 的矩阵")
        return cls(n=n, re=array.real.tolist(), im=array.imag.tolist())


class FanoPayload(BaseModel):
    """Fano 向量的 JSON 表示"""

    n: int = Field(..., ge=1, description="比特数")
    b: list[float] = Field(..., description="长度 4^n - 1 的系数列表")

    @model_validator(mode="after")
    def _check_length(self) -> FanoPayload:
        if len(self.b) != 4**self.n - 1:
            raise ValueError(f"b 长度必须为 {4**self.n - 1} (n={self.n})")
        return self

    def to_vector(self) -> FanoVector:
        return FanoVector(np.array(self.b))

    @classmethod
    def from_vector(cls, v: FanoVector) -> FanoPayload:
        return cls(n=v.n, b=v.b.tolist())


def matrix_to_json(matrix: np.ndarray) -> str:
    return MatrixPayload.from_array(matrix).model_dump_json()


def matrix_from_json(text: str) -> ComplexMatrix:
    return MatrixPayload.model_validate_json(text).to_array()


def fano_to_json(v: FanoVector) -> str:
    return FanoPayload.from_vector(v).model_dump_json()


def fano_from_json(text: str) -> FanoVector:
    return FanoPayload.model_validate_json(text).to_vector()
