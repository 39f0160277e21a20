"""
channels: 内置通道、仿射映射与 KAK 合成测试
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest
import scipy.integrate
import scipy.linalg
from pydantic import ValidationError

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from channels import (
    CHANNEL_CATALOGUE,
    AffineProcess,
    ChannelSpec,
    CorrelatedDephasingChannel,
    KakParams,
    KrausChannel,
    affine_apply,
    amplitude_damping,
    apply_channel,
    apply_kraus,
    bit_flip,
    channel_from_spec,
    channel_to_affine,
    compose_affine,
    correlated_dephasing,
    depolarizing,
    entangling_core,
    identity_channel,
    identity_process,
    kak_compose,
    kraus_completeness,
    phase_flip,
    random_kraus_channel,
    rz,
    rz_pair,
    tensor_channel,
    uncorrelated_dephasing,
    unitary_channel,
)
from pauli_fano import (
    PAULI_MATRICES,
    PauliString,
    density_to_fano,
    pauli_basis,
    pauli_index,
    pauli_matrix,
    pure_state,
    random_density_matrix,
)
from shared.errors import (
    ConfigError,
    DimensionMismatch,
    IncompleteKraus,
    NotUnitary,
    ParamOutOfRange,
)
from tomography import min_choi_eigenvalue


def _slot(text: str) -> int:
    return pauli_index(PauliString.parse(text)) - 1


def test_phase_flip_fixture():
    chi = channel_to_affine(phase_flip(0.25)).chi
    expected = np.array(
        [
            [0.5, 0, 0, 0],
            [0, 0.5, 0, 0],
            [0, 0, 1, 0],
        ]
    )
    np.testing.assert_allclose(chi, expected, atol=1e-12)


def test_amplitude_damping_fixture():
    chi = channel_to_affine(amplitude_damping(0.36)).chi
    expected = np.array(
        [
            [0.8, 0, 0, 0],
            [0, 0.8, 0, 0],
            [0, 0, 0.64, 0.36],
        ]
    )
    np.testing.assert_allclose(chi, expected, atol=1e-12)


def test_uncorrelated_dephasing_fixture():
    g = 0.8
    proc = channel_to_affine(uncorrelated_dephasing(0.1))
    expected = np.zeros((15, 15))
    for index, s in enumerate(PauliString.parse(t) for t in _all_two_qubit_labels()):
        expected[index, index] = g ** sum(axis in "XY" for axis in s.axes)
    np.testing.assert_allclose(proc.M, expected, atol=1e-12)
    assert not np.any(np.abs(proc.a) > 1e-12)


def _all_two_qubit_labels() -> list[str]:
    axes = "XYZI"
    return [a + b for a in axes for b in axes][:-1]


def test_correlated_dephasing_fixture():
    lam = 0.1
    g = math.exp(-lam)
    h, k = 0.5 * (1 + g**4), 0.5 * (1 - g**4)
    proc = correlated_dephasing(lam)
    M = proc.M

    for label in ["XZ", "XI", "YZ", "YI", "ZX", "ZY", "IX", "IY"]:
        assert M[_slot(label), _slot(label)] == pytest.approx(g, abs=1e-12)
    for label in ["ZZ", "ZI", "IZ"]:
        assert M[_slot(label), _slot(label)] == pytest.approx(1.0, abs=1e-12)
    for label in ["XX", "XY", "YX", "YY"]:
        assert M[_slot(label), _slot(label)] == pytest.approx(h, abs=1e-12)

    assert M[_slot("XX"), _slot("YY")] == pytest.approx(k, abs=1e-12)
    assert M[_slot("YY"), _slot("XX")] == pytest.approx(k, abs=1e-12)
    assert M[_slot("XY"), _slot("YX")] == pytest.approx(-k, abs=1e-12)
    assert M[_slot("YX"), _slot("XY")] == pytest.approx(-k, abs=1e-12)
    assert np.count_nonzero(M) == 15 + 4
    assert proc.is_unital


@pytest.mark.parametrize("lam", [0.0, 0.1, 1.0, 3.0])
def test_correlated_dephasing_state_channel_matches_closed_form(lam):
    exact = channel_to_affine(CorrelatedDephasingChannel(lam))
    np.testing.assert_allclose(exact.chi, correlated_dephasing(lam).chi, atol=1e-12)


@pytest.mark.parametrize("lam", [0.01, 0.1, 1.0, 5.0])
def test_correlated_dephasing_quadrature_oracle(lam):
    basis = pauli_basis(2)

    def transfer(theta: float) -> np.ndarray:
        weight = math.exp(-(theta**2) / (4 * lam)) / math.sqrt(4 * math.pi * lam)
        u = rz_pair(theta)
        images = np.einsum("ij,ajk,lk->ail", u, basis, u.conj())
        return weight * np.einsum("bij,aji->ba", basis, images).real.ravel() / 4

    limit = 20 * math.sqrt(lam)
    integral, _ = scipy.integrate.quad_vec(
        transfer, -limit, limit, epsabs=1e-13, epsrel=1e-12
    )
    numeric = integral.reshape(16, 16)
    np.testing.assert_allclose(
        numeric, correlated_dephasing(lam).full_matrix, atol=1e-8
    )


def test_rz_examples():
    np.testing.assert_allclose(rz(math.pi), np.diag([-1j, 1j]), atol=1e-15)
    np.testing.assert_allclose(rz_pair(math.pi), np.diag([-1, 1, 1, -1]), atol=1e-15)


def test_rz_pair_unitary_flips_plus_plus():
    rho = pure_state(np.array([1, 1, 1, 1]))
    out = density_to_fano(apply_channel(unitary_channel(rz_pair(math.pi)), rho))
    assert out.b[_slot("XX")] == pytest.approx(1.0, abs=1e-12)
    assert out.b[_slot("XI")] == pytest.approx(-1.0, abs=1e-12)
    assert out.b[_slot("IX")] == pytest.approx(-1.0, abs=1e-12)
    assert out.b[_slot("YY")] == pytest.approx(0.0, abs=1e-12)


def test_kraus_completeness_examples():
    assert kraus_completeness([np.eye(2)]) == 0.0
    assert kraus_completeness([math.sqrt(0.5) * np.eye(2)]) == pytest.approx(0.5)
    with pytest.raises(IncompleteKraus) as excinfo:
        KrausChannel((math.sqrt(0.5) * np.eye(2),))
    assert excinfo.value.residual == pytest.approx(0.5)
    with pytest.raises(IncompleteKraus):
        kraus_completeness([])


def _builtin_channels():
    yield phase_flip(0.3)
    yield bit_flip(0.2)
    yield depolarizing(0.4)
    yield amplitude_damping(0.6)
    yield uncorrelated_dephasing(0.15)
    yield CorrelatedDephasingChannel(0.7).to_kraus()
    for family in CHANNEL_CATALOGUE:
        upper = family.upper if math.isfinite(family.upper) else 5.0
        yield family.build(0.5 * (family.lower + upper))


def test_builtin_channels_are_cptp():
    rng = np.random.default_rng(11)
    for channel in _builtin_channels():
        kraus = channel.to_kraus()
        assert kraus_completeness(kraus) < 1e-10
        assert min_choi_eigenvalue(channel_to_affine(channel)) >= -1e-9
        for _ in range(500 // 12):
            rho = random_density_matrix(channel.n, rng)
            out = apply_channel(channel, rho)
            assert np.trace(out.data).real == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.eigvalsh(out.data).min() >= -1e-9


def test_random_channels_preserve_states():
    rng = np.random.default_rng(5)
    for _ in range(500):
        n = int(rng.integers(1, 3))
        channel = random_kraus_channel(n, int(rng.integers(1, 5)), rng)
        out = apply_kraus(channel, random_density_matrix(n, rng))
        assert np.trace(out.data).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(out.data).min() >= -1e-9


@pytest.mark.parametrize("n", [1, 2])
def test_affine_map_agrees_with_kraus_action(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(50):
        channel = random_kraus_channel(n, 3, rng)
        proc = channel_to_affine(channel)
        rho = random_density_matrix(n, rng)
        expected = density_to_fano(apply_channel(channel, rho)).b
        actual = affine_apply(proc, density_to_fano(rho)).b
        np.testing.assert_allclose(actual, expected, atol=1e-12)


def test_unital_channels_have_exact_zero_offset():
    for channel in [phase_flip(0.2), bit_flip(0.1), depolarizing(0.3), identity_channel(2)]:
        assert channel_to_affine(channel).is_unital
    assert not channel_to_affine(amplitude_damping(0.2)).is_unital


def test_compose_affine_matches_sequential_channels():
    rng = np.random.default_rng(8)
    first = random_kraus_channel(1, 2, rng)
    second = random_kraus_channel(1, 2, rng)
    sequential = KrausChannel(
        tuple(b @ a for a in first.ops for b in second.ops), name="sequential"
    )
    composed = compose_affine(channel_to_affine(second), channel_to_affine(first))
    np.testing.assert_allclose(
        composed.chi, channel_to_affine(sequential).chi, atol=1e-12
    )
    with pytest.raises(DimensionMismatch):
        compose_affine(identity_process(1), identity_process(2))


def test_tensor_channel_matches_uncorrelated_dephasing():
    paired = tensor_channel(phase_flip(0.1), phase_flip(0.1))
    assert paired.n == 2
    assert paired.rank == 4
    np.testing.assert_allclose(
        channel_to_affine(paired).chi,
        channel_to_affine(uncorrelated_dephasing(0.1)).chi,
        atol=1e-12,
    )


def test_tensor_with_correlated_dephasing_uses_kraus_form():
    channel = tensor_channel(CorrelatedDephasingChannel(0.2), amplitude_damping(0.3))
    assert channel.n == 3
    assert kraus_completeness(channel) < 1e-10


def test_parameter_validation():
    with pytest.raises(ParamOutOfRange):
        phase_flip(0.7)
    assert phase_flip(0.7, strict=False).rank == 2
    with pytest.raises(ParamOutOfRange):
        amplitude_damping(1.5)
    with pytest.raises(ParamOutOfRange):
        depolarizing(float("nan"))
    with pytest.raises(ParamOutOfRange):
        correlated_dephasing(-0.1)
    with pytest.raises(DimensionMismatch):
        apply_channel(phase_flip(0.1), random_density_matrix(2, np.random.default_rng(0)))


def test_affine_process_shapes():
    with pytest.raises(DimensionMismatch):
        AffineProcess(np.eye(3), np.zeros(4))
    with pytest.raises(DimensionMismatch):
        AffineProcess(np.eye(4), np.zeros(4))
    proc = AffineProcess.from_chi(np.column_stack([np.eye(3), [0, 0, 0.5]]))
    assert proc.full_matrix[-1].tolist() == [0, 0, 0, 1]


def test_kak_examples():
    np.testing.assert_allclose(kak_compose(KakParams()), np.eye(4), atol=1e-15)
    tz = 0.3
    expected = np.diag(np.exp(1j * tz * np.array([1, -1, -1, 1])))
    np.testing.assert_allclose(kak_compose(KakParams(theta_z=tz)), expected, atol=1e-12)


def test_entangling_core_matches_matrix_exponential():
    rng = np.random.default_rng(9)
    xx = pauli_matrix(PauliString.parse("XX"))
    yy = pauli_matrix(PauliString.parse("YY"))
    zz = pauli_matrix(PauliString.parse("ZZ"))
    for _ in range(20):
        tx, ty, tz = rng.uniform(-math.pi, math.pi, 3)
        oracle = scipy.linalg.expm(1j * (tx * xx + ty * yy + tz * zz))
        np.testing.assert_allclose(entangling_core(tx, ty, tz), oracle, atol=1e-12)


def test_kak_with_local_gates_is_unitary_channel():
    hadamard = (PAULI_MATRICES["X"] + PAULI_MATRICES["Z"]) / math.sqrt(2)
    kp = KakParams(theta_x=0.2, theta_y=0.1, a1=hadamard, b2=PAULI_MATRICES["Y"])
    channel = unitary_channel(kak_compose(kp))
    assert kraus_completeness(channel) < 1e-12
    with pytest.raises(NotUnitary):
        KakParams(a1=np.array([[1, 1], [0, 1]]))
    with pytest.raises(DimensionMismatch):
        KakParams(a1=np.eye(4))


def test_channel_spec_parsing():
    spec = ChannelSpec.model_validate(
        {
            "type": "tensor",
            "children": [
                {"type": "phase_flip", "params": {"p": 0.1}},
                {"type": "amplitude_damping", "params": {"p": 0.2}},
            ],
        }
    )
    assert spec.qubit_count() == 2
    channel = channel_from_spec(spec)
    expected = tensor_channel(phase_flip(0.1), amplitude_damping(0.2))
    np.testing.assert_allclose(
        channel_to_affine(channel).chi, channel_to_affine(expected).chi, atol=1e-12
    )

    correlated = channel_from_spec(
        ChannelSpec(type="correlated_dephasing", params={"lam": 0.1})
    )
    assert correlated.n == 2

    unitary = ChannelSpec.model_validate(
        {"type": "unitary", "params": {"matrix": {"n": 1, "re": [[0, 1], [1, 0]]}}}
    )
    assert unitary.qubit_count() == 1
    assert channel_from_spec(unitary).n == 1


def test_channel_spec_errors():
    with pytest.raises(ValidationError):
        ChannelSpec.model_validate(
            {"type": "tensor", "children": [{"type": "identity"}]}
        )
    with pytest.raises(ValidationError):
        ChannelSpec.model_validate({"type": "teleport"})
    with pytest.raises(ConfigError):
        channel_from_spec(ChannelSpec(type="phase_flip"))
    with pytest.raises(ConfigError):
        channel_from_spec(ChannelSpec(type="phase_flip", params={"p": "abc"}))
    with pytest.raises(ParamOutOfRange):
        channel_from_spec(ChannelSpec(type="phase_flip", params={"p": 0.7}))
    with pytest.raises(IncompleteKraus):
        channel_from_spec(
            ChannelSpec(
                type="kraus",
                params={"ops": [{"n": 1, "re": [[0.5, 0], [0, 0.5]]}]},
            )
        )
    with pytest.raises(NotUnitary):
        channel_from_spec(
            ChannelSpec(
                type="unitary", params={"matrix": {"n": 1, "re": [[1, 1], [0, 1]]}}
            )
        )


def test_channel_spec_rejects_malformed_shapes():
    with pytest.raises(ConfigError):
        channel_from_spec(ChannelSpec(type="identity", params={"n": 0}))
    with pytest.raises(ConfigError):
        ChannelSpec(type="correlated_dephasing", params={"lam": 0.1, "n": "2"}).qubit_count()
    mixed = ChannelSpec(
        type="kraus",
        params={
            "ops": [
                {"n": 1, "re": [[1, 0], [0, 0]]},
                {"n": 2, "re": [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]},
            ]
        },
    )
    with pytest.raises(ConfigError):
        channel_from_spec(mixed)


@pytest.mark.parametrize(("raw", "accepted"), [(False, True), ("false", True), (True, False), ("true", False)])
def test_channel_spec_strict_flag(raw, accepted):
    spec = ChannelSpec(type="phase_flip", params={"p": 0.7, "strict": raw})
    if accepted:
        assert channel_from_spec(spec).n == 1
    else:
        with pytest.raises(ParamOutOfRange):
            channel_from_spec(spec)
    with pytest.raises(ConfigError):
        channel_from_spec(ChannelSpec(type="bit_flip", params={"p": 0.1, "strict": "maybe"}))
