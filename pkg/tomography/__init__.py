"""
标准过程层析

制备基、R/R' 组装、线性反演 𝓜 = R' R^{-1}、chi_F 提取与物理性诊断.
"""

from .basis import (
    PRINTED_R1,
    PRINTED_R1_INVERSE,
    SINGLE_QUBIT_KETS,
    PreparationBasis,
    RMatrix,
    invert_R,
    preparation_basis,
)
from .choi import affine_to_kraus, chi_to_choi, min_choi_eigenvalue
from .export import (
    ProcessPayload,
    load_process,
    process_from_csv,
    process_from_json,
    process_to_csv,
    process_to_frame,
    process_to_json,
)
from .reconstruct import ReconstructionResult, exact_output_matrix, reconstruct

__all__ = [
    "PRINTED_R1",
    "PRINTED_R1_INVERSE",
    "SINGLE_QUBIT_KETS",
    "PreparationBasis",
    "ProcessPayload",
    "RMatrix",
    "ReconstructionResult",
    "affine_to_kraus",
    "chi_to_choi",
    "exact_output_matrix",
    "invert_R",
    "load_process",
    "min_choi_eigenvalue",
    "preparation_basis",
    "process_from_csv",
    "process_from_json",
    "process_to_csv",
    "process_to_frame",
    "process_to_json",
    "reconstruct",
]
