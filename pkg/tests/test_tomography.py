"""
tomography: 制备基、线性反演、Choi 诊断与 chi_F 文件格式测试
"""

import json
import sys
from pathlib import Path

import numpy as np
import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from channels import (
    AffineProcess,
    CorrelatedDephasingChannel,
    amplitude_damping,
    bit_flip,
    channel_to_affine,
    correlated_dephasing,
    depolarizing,
    identity_process,
    phase_flip,
    random_kraus_channel,
    uncorrelated_dephasing,
)
from shared.errors import (
    CapExceeded,
    ConfigError,
    DimensionMismatch,
    NotPositive,
    SingularBasis,
)
from tomography import (
    PRINTED_R1,
    PRINTED_R1_INVERSE,
    RMatrix,
    affine_to_kraus,
    chi_to_choi,
    exact_output_matrix,
    invert_R,
    load_process,
    min_choi_eigenvalue,
    preparation_basis,
    process_from_csv,
    process_from_json,
    process_to_csv,
    process_to_json,
    reconstruct,
)

R2_PRINTED = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1],
        [1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0],
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    ],
    dtype=np.float64,
)

# 打印值整体乘 1/4
R2_INVERSE_PRINTED = 0.25 * np.array(
    [
        [1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1],
        [1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1, -1, -1, -1, 1],
        [-2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0],
        [0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0],
        [1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1],
        [1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1],
        [-2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0],
        [0, -2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0],
        [-2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [-2, -2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, -2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ],
    dtype=np.float64,
)


def test_single_qubit_r_matrix_fixture():
    r = preparation_basis(1).input_matrix()
    np.testing.assert_allclose(r.data, PRINTED_R1, atol=1e-12)
    np.testing.assert_allclose(invert_R(r).data, PRINTED_R1_INVERSE, atol=1e-12)


def test_two_qubit_r_matrix_fixture():
    r = preparation_basis(2).input_matrix()
    np.testing.assert_allclose(r.data, R2_PRINTED, atol=1e-12)
    np.testing.assert_allclose(invert_R(r).data, R2_INVERSE_PRINTED, atol=1e-12)


def test_r_matrix_is_tensor_power():
    r1 = preparation_basis(1).input_matrix().data
    r3 = preparation_basis(3).input_matrix().data
    np.testing.assert_allclose(r3, np.kron(np.kron(r1, r1), r1), atol=1e-12)


def test_preparation_basis_labels_and_cap(monkeypatch):
    basis = preparation_basis(2)
    assert len(basis.states) == 16
    assert basis.labels[0] == "|0>|0>"
    assert basis.labels[-1] == "|+i>|+i>"
    with pytest.raises(CapExceeded):
        preparation_basis(0)
    monkeypatch.setenv("QPT_MAX_QUBITS", "2")
    with pytest.raises(CapExceeded):
        preparation_basis(3)


def test_invert_r_rejects_singular_matrix():
    singular = np.eye(4)
    singular[0] = singular[1]
    with pytest.raises(SingularBasis) as excinfo:
        invert_R(RMatrix(singular))
    assert excinfo.value.condition_number > 1e12 or not np.isfinite(
        excinfo.value.condition_number
    )
    with pytest.raises(DimensionMismatch):
        RMatrix(np.eye(8))


def _reconstruct_exact(channel):
    basis = preparation_basis(channel.n)
    return reconstruct(exact_output_matrix(channel, basis), basis.input_matrix())


@pytest.mark.parametrize(
    "channel",
    [
        phase_flip(0.25),
        bit_flip(0.1),
        depolarizing(0.3),
        amplitude_damping(0.36),
        uncorrelated_dephasing(0.1),
        CorrelatedDephasingChannel(0.1),
    ],
    ids=lambda channel: channel.name,
)
def test_reconstruction_matches_exact_map(channel):
    result = _reconstruct_exact(channel)
    np.testing.assert_allclose(
        result.process.chi, channel_to_affine(channel).chi, atol=1e-12
    )
    assert result.last_row_residual < 1e-10
    assert result.is_physical


def test_reconstruction_reproduces_closed_form_correlated_dephasing():
    result = _reconstruct_exact(CorrelatedDephasingChannel(0.1))
    np.testing.assert_allclose(
        result.process.chi, correlated_dephasing(0.1).chi, atol=1e-12
    )


@pytest.mark.parametrize("n", [1, 2])
def test_reconstruction_oracle_for_random_channels(n):
    rng = np.random.default_rng(4000 + n)
    for _ in range(100):
        channel = random_kraus_channel(n, int(rng.integers(1, 2 ** (2 * n) + 1)), rng)
        result = _reconstruct_exact(channel)
        np.testing.assert_allclose(
            result.process.chi, channel_to_affine(channel).chi, atol=1e-12
        )


def test_reconstruct_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        reconstruct(
            preparation_basis(1).input_matrix(), preparation_basis(2).input_matrix()
        )


def test_choi_of_identity_is_maximally_entangled():
    choi = chi_to_choi(identity_process(1))
    phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    np.testing.assert_allclose(choi, 2 * np.outer(phi, phi), atol=1e-12)
    eigenvalues = np.linalg.eigvalsh(choi)
    np.testing.assert_allclose(eigenvalues, [0, 0, 0, 2], atol=1e-12)


def test_choi_trace_and_partial_trace():
    rng = np.random.default_rng(12)
    channel = random_kraus_channel(2, 3, rng)
    choi = chi_to_choi(channel_to_affine(channel)).reshape(4, 4, 4, 4)
    # 对输出求偏迹得到输入空间的单位阵(保迹)
    np.testing.assert_allclose(np.einsum("ikjk->ij", choi), np.eye(4), atol=1e-12)


def test_choi_spectrum_examples():
    flip = np.linalg.eigvalsh(chi_to_choi(channel_to_affine(phase_flip(0.25))))
    np.testing.assert_allclose(np.sort(flip), [0.0, 0.0, 0.5, 1.5], atol=1e-12)

    stretched = AffineProcess(np.diag([1.2, 1.0, 1.0]), np.zeros(3))
    assert min_choi_eigenvalue(stretched) == pytest.approx(-0.1, abs=1e-12)
    assert min_choi_eigenvalue(stretched) < 0
    with pytest.raises(NotPositive):
        affine_to_kraus(stretched)


def test_transpose_map_is_not_completely_positive():
    transpose = AffineProcess(np.diag([1.0, -1.0, 1.0]), np.zeros(3))
    assert min_choi_eigenvalue(transpose) == pytest.approx(-1.0, abs=1e-12)
    with pytest.raises(NotPositive) as excinfo:
        affine_to_kraus(transpose)
    assert excinfo.value.min_eigenvalue == pytest.approx(-1.0, abs=1e-12)


def test_affine_to_kraus_round_trip():
    for proc in [
        channel_to_affine(amplitude_damping(0.36)),
        correlated_dephasing(0.4),
        channel_to_affine(depolarizing(0.2)),
    ]:
        kraus = affine_to_kraus(proc)
        np.testing.assert_allclose(channel_to_affine(kraus).chi, proc.chi, atol=1e-12)
    assert affine_to_kraus(identity_process(1)).rank == 1
    assert affine_to_kraus(channel_to_affine(amplitude_damping(0.36))).rank == 2


def test_process_json_round_trip(tmp_path):
    proc = channel_to_affine(amplitude_damping(0.36))
    text = process_to_json(proc)
    payload = json.loads(text)
    assert payload["n"] == 1
    assert payload["a"] == pytest.approx([0.0, 0.0, 0.36])
    restored = process_from_json(text).to_process()
    assert np.array_equal(restored.chi, proc.chi)

    path = tmp_path / "chi.json"
    path.write_text(text, encoding="utf-8")
    assert np.array_equal(load_process(path).chi, proc.chi)

    with pytest.raises(ValueError):
        process_from_json('{"n": 1, "M": [[1, 0], [0, 1]], "a": [0, 0]}')


def test_process_csv_layout(tmp_path):
    proc = AffineProcess(np.diag([0.5, 0.5, 1.0]), np.zeros(3))
    path = tmp_path / "chi.csv"
    text = process_to_csv(proc, path)
    lines = text.splitlines()
    assert lines[0] == ",x,y,z,a"
    assert lines[1] == "x,0.5,0,0,0"
    assert lines[3] == "z,0,0,1,0"
    assert np.array_equal(process_from_csv(path).chi, proc.chi)

    two = process_to_csv(correlated_dephasing(0.1)).splitlines()
    assert two[0].startswith(",xx,xy,xz,xI,yx")
    assert two[0].endswith("Iz,a")
    assert len(two) == 16


def test_process_csv_with_wrong_labels(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text(",p,q,r,a\nx,1,0,0,0\ny,0,1,0,0\nz,0,0,1,0\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        process_from_csv(path)
