"""chi_F 稀疏模式: 相对恒等过程的显著偏离"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from channels import AffineProcess, identity_process
from pauli_fano import pauli_labels
from shared.errors import InputOutOfRange


@dataclass(frozen=True, eq=False)
class FlaggedEntry:
    row: str
    column: str
    value: float
    deviation: float


@dataclass(frozen=True, eq=False)
class PatternReport:
    """mask 与 chi_F 同形状, True 表示偏离恒等过程超过阈值"""

    mask: np.ndarray
    nonzero_count: int
    threshold: float
    entries: tuple[FlaggedEntry, ...]


def sparsity_pattern(proc: AffineProcess, threshold: float) -> PatternReport:
    """标记 |chi_F - chi_identity| > threshold 的元素

    Raises:
        InputOutOfRange: threshold <= 0
    """
    if not threshold > 0:
        raise InputOutOfRange(f"阈值必须为正, 实际 {threshold}")
    chi = proc.chi
    deviation = chi - identity_process(proc.n).chi
    mask = np.abs(deviation) > threshold
    mask.setflags(write=False)

    rows = pauli_labels(proc.n)
    columns = [*rows, "a"]
    entries = tuple(
        FlaggedEntry(rows[i], columns[j], float(chi[i, j]), float(deviation[i, j]))
        for i, j in zip(*np.nonzero(mask), strict=True)
    )
    return PatternReport(
        mask=mask,
        nonzero_count=int(mask.sum()),
        threshold=threshold,
        entries=entries,
    )
