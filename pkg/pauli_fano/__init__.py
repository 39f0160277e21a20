"""
Pauli 基与 Fano 表示

Pauli 串索引、密度矩阵与广义 Bloch 向量之间的无损转换.
"""

from .io import (
    FanoPayload,
    MatrixPayload,
    fano_from_json,
    fano_to_json,
    matrix_from_json,
    matrix_to_json,
)
from .pauli import (
    AXES,
    PAULI_MATRICES,
    PauliString,
    all_pauli_strings,
    pauli_basis,
    pauli_from_index,
    pauli_index,
    pauli_labels,
    pauli_matrix,
    qubit_count_for_dimension,
    qubit_count_for_fano_length,
)
from .states import (
    DensityMatrix,
    FanoVector,
    density_to_fano,
    fano_matrix,
    fano_to_density,
    pure_state,
    random_density_matrix,
    tensor_states,
)

__all__ = [
    "AXES",
    "PAULI_MATRICES",
    "DensityMatrix",
    "FanoPayload",
    "FanoVector",
    "MatrixPayload",
    "PauliString",
    "all_pauli_strings",
    "density_to_fano",
    "fano_from_json",
    "fano_matrix",
    "fano_to_density",
    "fano_to_json",
    "matrix_from_json",
    "matrix_to_json",
    "pauli_basis",
    "pauli_from_index",
    "pauli_index",
    "pauli_labels",
    "pauli_matrix",
    "pure_state",
    "qubit_count_for_dimension",
    "qubit_count_for_fano_length",
    "random_density_matrix",
    "tensor_states",
]
