"""Pauli 串与 Fano 系数索引

Pauli 串按比特 1 到比特 n 排列, 比特 1 为最高位(张量积最左侧因子).
单比特轴的顺序是 x, y, z, I, 因此 n 比特的展平索引为

    alpha = sum_k (i_k - 1) * 4^(n-k) + 1,  i_k = 1,2,3,4 对应 X,Y,Z,I

全 I 串落在 4^n, 不属于广义 Bloch 向量.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

import numpy as np
from loguru import logger

from shared.errors import DimensionMismatch
from shared.typing import AxisLiteral, ComplexMatrix

AXES: tuple[AxisLiteral, ...] = ("X", "Y", "Z", "I")
_AXIS_POSITION = {axis: pos for pos, axis in enumerate(AXES)}

PAULI_MATRICES: dict[str, ComplexMatrix] = {
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
    "I": np.eye(2, dtype=np.complex128),
}
for _matrix in PAULI_MATRICES.values():
    _matrix.setflags(write=False)


@dataclass(frozen=True)
class PauliString:
    """n 比特 Pauli 串, axes[0] 为比特 1"""

    axes: tuple[AxisLiteral, ...]

    def __post_init__(self) -> None:
        if len(self.axes) < 1:
            raise DimensionMismatch("Pauli 串长度必须 >= 1")
        invalid = [axis for axis in self.axes if axis not in _AXIS_POSITION]
        if invalid:
            raise ValueError(f"非法 Pauli 轴标签: {invalid}, 只允许 X/Y/Z/I")

    @classmethod
    def parse(cls, text: str) -> PauliString:
        """从 "XZ" / "xI" 这类文本构造, 小写 x/y/z 视同大写"""
        axes = tuple(text.strip().upper())
        return cls(axes)  # type: ignore[arg-type]

    @property
    def n(self) -> int:
        return len(self.axes)

    @property
    def is_identity(self) -> bool:
        return all(axis == "I" for axis in self.axes)

    @property
    def label(self) -> str:
        """文献写法: x/y/z 小写, I 保持大写, 如 "xx", "zI", "Iz" """
        return "".join(axis if axis == "I" else axis.lower() for axis in self.axes)

    def __str__(self) -> str:
        return "".join(self.axes)


def pauli_index(s: PauliString) -> int:
    """返回 Pauli 串的 1 起始展平索引, 取值 1..4^n

    Examples:
        X -> 1, I -> 4, XX -> 1, IZ -> 15, II -> 16
    """
    index = 0
    for axis in s.axes:
        index = index * 4 + _AXIS_POSITION[axis]
    return index + 1


def pauli_from_index(index: int, n: int) -> PauliString:
    """pauli_index 的逆映射"""
    if not 1 <= index <= 4**n:
        raise ValueError(f"索引 {index} 超出 1..{4**n}")
    digits: list[AxisLiteral] = []
    remainder = index - 1
    for _ in range(n):
        remainder, position = divmod(remainder, 4)
        digits.append(AXES[position])
    return PauliString(tuple(reversed(digits)))


def pauli_matrix(s: PauliString) -> ComplexMatrix:
    """sigma_{a1} ⊗ ... ⊗ sigma_{an}, 比特 1 为最左侧因子"""
    result = PAULI_MATRICES[s.axes[0]]
    for axis in s.axes[1:]:
        result = np.kron(result, PAULI_MATRICES[axis])
    return np.array(result, dtype=np.complex128)


@cache
def all_pauli_strings(n: int) -> tuple[PauliString, ...]:
    """按 pauli_index 顺序列出全部 4^n 个 Pauli 串(全 I 在最后)"""
    return tuple(PauliString(axes) for axes in product(AXES, repeat=n))


@cache
def pauli_basis(n: int) -> ComplexMatrix:
    """形状 (4^n, 2^n, 2^n) 的 Pauli 矩阵栈, 第 k 个对应索引 k+1"""
    stack = np.stack([pauli_matrix(s) for s in all_pauli_strings(n)])
    stack.setflags(write=False)
    return stack


def pauli_labels(n: int, include_identity: bool = False) -> list[str]:
    """Fano 向量分量的标签, 默认去掉全 I"""
    strings = all_pauli_strings(n)
    if not include_identity:
        strings = strings[:-1]
    return [s.label for s in strings]


def qubit_count_for_dimension(dim: int) -> int:
    """由 2^n 维度反推比特数, 非 2 的幂直接失败"""
    n = dim.bit_length() - 1
    if n < 1 or 2**n != dim:
        raise DimensionMismatch(f"维度 {dim} 不是 2^n (n >= 1)")
    return n


def qubit_count_for_fano_length(length: int) -> int:
    """由 4^n - 1 的 Fano 向量长度反推比特数"""
    n = 1
    while 4**n - 1 < length:
        n += 1
    if 4**n - 1 != length:
        raise DimensionMismatch(f"长度 {length} 不是 4^n - 1")
    return n


if __name__ == "__main__":
    for text in ["X", "I", "XX", "IZ", "II"]:
        s = PauliString.parse(text)
        logger.info(f"{s.label:>3} -> {pauli_index(s)}")
    logger.info(f"n=2 Fano 标签: {pauli_labels(2)}")
