"""
共享类型别名

集中维护跨模块使用的数组与字面量类型, 避免重复定义.
"""

from typing import Literal, TypeAlias

import numpy as np
from numpy.typing import NDArray

# 复矩阵(密度矩阵、Kraus 算符、Pauli 矩阵)
ComplexMatrix: TypeAlias = NDArray[np.complex128]

# 实矩阵与实向量(R 矩阵、M、a、Fano 向量)
RealMatrix: TypeAlias = NDArray[np.float64]
RealVector: TypeAlias = NDArray[np.float64]

# Pauli 轴标签, I 为单位阵
AxisLiteral: TypeAlias = Literal["X", "Y", "Z", "I"]

# 可测量的轴(测量设置中不出现 I)
MeasuredAxisLiteral: TypeAlias = Literal["X", "Y", "Z"]
