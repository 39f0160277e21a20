"""
cli: 子命令、退出码与输出确定性测试
"""

import json
import math
import sys
from pathlib import Path

import numpy as np
import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import cli.commands
from channels import AffineProcess, correlated_dephasing
from cli import RunConfig, main
from pydantic import ValidationError
from shared.errors import SingularBasis
from tomography import process_from_csv, process_from_json, process_to_csv, process_to_json


def _write_config(tmp_path: Path, name: str, payload: dict) -> Path:
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


PHASE_FLIP = {"type": "phase_flip", "params": {"p": 0.25}}
CORRELATED = {"type": "correlated_dephasing", "params": {"lam": 0.1}}


def test_qpt_exact_phase_flip(tmp_path):
    config = _write_config(tmp_path, "pf.json", {"channel": PHASE_FLIP})
    prefix = tmp_path / "out" / "pf"
    assert main(["qpt", "--config", str(config), "--out", str(prefix)]) == 0

    expected = np.array([[0.5, 0, 0, 0], [0, 0.5, 0, 0], [0, 0, 1, 0]])
    chi = process_from_csv(prefix.with_suffix(".csv")).chi
    np.testing.assert_allclose(chi, expected, atol=1e-12)
    payload = process_from_json(prefix.with_suffix(".json").read_text(encoding="utf-8"))
    np.testing.assert_allclose(payload.to_process().chi, expected, atol=1e-12)
    assert payload.min_choi_eig is not None and payload.min_choi_eig >= -1e-9


def test_qpt_exact_correlated_dephasing(tmp_path):
    config = _write_config(tmp_path, "cd.json", {"channel": CORRELATED, "mode": "exact"})
    prefix = tmp_path / "cd"
    assert main(["qpt", "--config", str(config), "--out", str(prefix), "--format", "csv"]) == 0
    assert not prefix.with_suffix(".json").exists()
    chi = process_from_csv(prefix.with_suffix(".csv")).chi
    np.testing.assert_allclose(chi, correlated_dephasing(0.1).chi, atol=1e-12)


def test_qpt_exact_runs_are_byte_identical(tmp_path):
    config = _write_config(tmp_path, "cd.json", {"channel": CORRELATED})
    for name in ["first", "second"]:
        assert main(["qpt", "--config", str(config), "--out", str(tmp_path / name)]) == 0
    for suffix in [".json", ".csv"]:
        first = (tmp_path / f"first{suffix}").read_bytes()
        assert first == (tmp_path / f"second{suffix}").read_bytes()


def test_qpt_shots_mode_is_deterministic(tmp_path):
    config = _write_config(
        tmp_path,
        "ad.json",
        {
            "channel": {"type": "amplitude_damping", "params": {"p": 0.36}},
            "mode": "shots",
            "shots": 2000,
            "seed": 11,
        },
    )
    for name in ["first", "second"]:
        code = main(
            [
                "qpt",
                "--config",
                str(config),
                "--out",
                str(tmp_path / name),
                "--shots-out",
                str(tmp_path / f"{name}.jsonl"),
            ]
        )
        assert code == 0
    for suffix in [".json", ".csv", ".jsonl"]:
        first = (tmp_path / f"first{suffix}").read_bytes()
        assert first == (tmp_path / f"second{suffix}").read_bytes()

    assert main(["qpt", "--config", str(config), "--seed", "12", "--out", str(tmp_path / "other")]) == 0
    assert (tmp_path / "other.json").read_bytes() != (tmp_path / "first.json").read_bytes()


def test_qpt_from_shots_reproduces_estimate(tmp_path):
    config = _write_config(tmp_path, "pf.json", {"channel": PHASE_FLIP})
    args = ["qpt", "--config", str(config), "--shots", "500", "--seed", "3"]
    shots_path = tmp_path / "pf.jsonl"
    assert main([*args, "--out", str(tmp_path / "direct"), "--shots-out", str(shots_path)]) == 0
    assert main(["qpt", "--from-shots", str(shots_path), "--out", str(tmp_path / "imported")]) == 0
    direct = (tmp_path / "direct.json").read_bytes()
    assert direct == (tmp_path / "imported.json").read_bytes()


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig.model_validate({"channel": PHASE_FLIP, "mode": "shots"})
    with pytest.raises(ValidationError):
        RunConfig.model_validate({"channel": PHASE_FLIP, "mode": "exact", "shots": 10})
    with pytest.raises(ValidationError):
        RunConfig.model_validate({"channel": PHASE_FLIP, "n": 2})
    config = RunConfig.model_validate({"channel": CORRELATED})
    assert config.n == 2
    assert config.mode == "exact"


@pytest.mark.parametrize(
    ("payload", "code"),
    [
        ({"channel": PHASE_FLIP, "mode": "shots"}, 2),
        ({"channel": PHASE_FLIP, "n": 2}, 2),
        ({"channel": {"type": "phase_flip"}}, 2),
        ({"channel": {"type": "teleport"}}, 2),
        ({"channel": {"type": "phase_flip", "params": {"p": 0.7}}}, 4),
        ({"channel": {"type": "depolarizing", "params": {"p": -0.1}}}, 4),
        (
            {"channel": {"type": "kraus", "params": {"ops": [{"n": 1, "re": [[0.5, 0], [0, 0.5]]}]}}},
            4,
        ),
        (
            {"channel": {"type": "unitary", "params": {"matrix": {"n": 1, "re": [[1, 1], [0, 1]]}}}},
            4,
        ),
        ({"channel": {"type": "identity", "params": {"n": 0}}}, 2),
        (
            {
                "channel": {
                    "type": "kraus",
                    "params": {
                        "ops": [
                            {"n": 1, "re": [[1, 0], [0, 1]]},
                            {"n": 2, "re": [[0] * 4 for _ in range(4)]},
                        ]
                    },
                }
            },
            2,
        ),
        ({"channel": {"type": "phase_flip", "params": {"p": 0.7, "strict": "false"}}}, 0),
    ],
)
def test_qpt_exit_codes(tmp_path, payload, code):
    config = _write_config(tmp_path, "bad.json", payload)
    assert main(["qpt", "--config", str(config), "--out", str(tmp_path / "x")]) == code


def test_qpt_config_file_errors(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert main(["qpt", "--config", str(broken)]) == 2
    assert main(["qpt", "--config", str(tmp_path / "missing.json")]) == 2
    listed = _write_config(tmp_path, "list.json", [1, 2])  # type: ignore[arg-type]
    assert main(["qpt", "--config", str(listed)]) == 2
    assert main(["qpt"]) == 2


def test_qpt_numerical_failures(tmp_path, monkeypatch):
    pair = {"type": "tensor", "children": [PHASE_FLIP, PHASE_FLIP]}
    config = _write_config(tmp_path, "pair.json", {"channel": pair})
    monkeypatch.setenv("QPT_MAX_QUBITS", "1")
    assert main(["qpt", "--config", str(config), "--out", str(tmp_path / "x")]) == 3
    monkeypatch.delenv("QPT_MAX_QUBITS")

    def singular(*_args, **_kwargs):
        raise SingularBasis("R 矩阵病态", float("inf"))

    monkeypatch.setattr(cli.commands, "tomography_experiment", singular)
    single = _write_config(tmp_path, "pf.json", {"channel": PHASE_FLIP})
    assert main(["qpt", "--config", str(single), "--out", str(tmp_path / "y")]) == 3


def _analyze(tmp_path: Path, source: Path) -> dict:
    report_path = tmp_path / "report.json"
    assert main(["analyze", str(source), "--out", str(report_path)]) == 0
    return json.loads(report_path.read_text(encoding="utf-8"))


def test_analyze_amplitude_damping_csv(tmp_path):
    proc = AffineProcess(np.diag([0.8, 0.8, 0.64]), np.array([0.0, 0.0, 0.36]))
    source = tmp_path / "ad.csv"
    process_to_csv(proc, source)
    report = _analyze(tmp_path, source)
    assert {"pattern", "fits", "budget"} <= set(report)
    assert {"family", "param", "residual"} <= set(report["fits"][0])
    assert report["best"] == "amplitude_damping"
    best = report["fits"][0]
    assert best["param"] == pytest.approx(0.36, abs=1e-9)
    assert report["pattern"]["nonzero_count"] == 4
    assert report["budget"]["total"] == 12


def test_analyze_uncorrelated_dephasing_json(tmp_path):
    g = 0.8
    diagonal = []
    for a in "XYZI":
        for b in "XYZI":
            diagonal.append(g ** sum(axis in "XY" for axis in a + b))
    proc = AffineProcess(np.diag(diagonal[:-1]), np.zeros(15))
    source = tmp_path / "ud.json"
    source.write_text(process_to_json(proc), encoding="utf-8")
    report = _analyze(tmp_path, source)
    assert report["best"] == "uncorrelated_dephasing"
    assert report["fits"][0]["param"] == pytest.approx(0.1, abs=1e-9)
    assert report["budget"]["total"] == 27


def test_analyze_identity(tmp_path):
    source = tmp_path / "id.json"
    source.write_text(process_to_json(AffineProcess(np.eye(3), np.zeros(3))), encoding="utf-8")
    report = _analyze(tmp_path, source)
    assert report["pattern"]["nonzero_count"] == 0
    assert report["ambiguous"] is True
    for fit in report["fits"]:
        assert fit["param"] == pytest.approx(0.0, abs=1e-9)
        assert fit["residual"] < 1e-12


def test_analyze_malformed_inputs(tmp_path):
    garbage = tmp_path / "garbage.json"
    garbage.write_text('{"n": 1, "M": [[1]]}', encoding="utf-8")
    assert main(["analyze", str(garbage)]) == 2

    ragged = tmp_path / "ragged.csv"
    ragged.write_text(",x,y,a\nx,1,0,0\ny,0,1,0\n", encoding="utf-8")
    assert main(["analyze", str(ragged)]) == 2

    assert main(["analyze", str(tmp_path / "missing.json")]) == 2

    with pytest.raises(SystemExit) as excinfo:
        main(["analyze", str(garbage), "--threshold", "0"])
    assert excinfo.value.code == 2


def _discriminate(tmp_path: Path, channel: dict, *extra: str) -> dict:
    config = _write_config(tmp_path, "disc.json", {"channel": channel})
    out = tmp_path / "disc_result.json"
    assert main(["discriminate", "--config", str(config), "--out", str(out), *extra]) == 0
    return json.loads(out.read_text(encoding="utf-8"))


def test_discriminate_exact_examples(tmp_path):
    correlated = _discriminate(
        tmp_path, {"type": "correlated_dephasing", "params": {"lam": 0.2}}
    )
    assert correlated["classification"] == "correlated"
    assert correlated["g_hat"] == pytest.approx(math.exp(-0.2), abs=1e-12)

    uncorrelated = _discriminate(
        tmp_path, {"type": "uncorrelated_dephasing", "params": {"p": 0.1}}
    )
    assert uncorrelated["classification"] == "uncorrelated"
    assert uncorrelated["g_hat"] == pytest.approx(0.8, abs=1e-12)

    noiseless = _discriminate(
        tmp_path, {"type": "correlated_dephasing", "params": {"lam": 0.0}}
    )
    assert noiseless["classification"] == "inconclusive"


def test_discriminate_with_shots(tmp_path):
    result = _discriminate(
        tmp_path,
        {"type": "correlated_dephasing", "params": {"lam": 0.1}},
        "--shots",
        "100000",
        "--seed",
        "5",
    )
    assert result["classification"] == "correlated"
    assert result["g_stderr"] is not None
    assert result["g_hat"] == pytest.approx(math.exp(-0.1), abs=5 * result["g_stderr"])


def test_discriminate_requires_two_qubits(tmp_path):
    config = _write_config(tmp_path, "single.json", {"channel": PHASE_FLIP})
    assert main(["discriminate", "--config", str(config)]) == 2


def test_channels_list():
    assert main(["channels", "list"]) == 0


def test_log_level_option():
    assert main(["--log-level", "debug", "channels", "list"]) == 0
    with pytest.raises(SystemExit) as excinfo:
        main(["--log-level", "BOGUS", "channels", "list"])
    assert excinfo.value.code == 2
