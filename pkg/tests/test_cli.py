import json

import numpy as np
import pytest

from qcosmo import cli


def run(argv):
    return cli.main(argv)


def read_json(path):
    return json.loads(path.read_text())


def test_exact_table1(tmp_path, capsys):
    assert run(["exact", "--preset", "table1", "--out", str(tmp_path)]) == 0
    payload = read_json(tmp_path / "exact.json")
    assert payload["exact_ground"] == pytest.approx(0.49785652, abs=1e-6)
    assert payload["pauli_terms"] == 135
    assert payload["dim"] == 16
    assert payload["schema_version"] == 1
    assert payload["config"]["model"] == "starobinsky"


def test_exact_table4(tmp_path):
    assert run(["exact", "--preset", "table4-16", "--out", str(tmp_path)]) == 0
    payload = read_json(tmp_path / "exact.json")
    assert payload["pauli_terms"] == 25
    assert np.isfinite(payload["exact_ground"])


def test_malformed_config_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["exact", "--config", str(bad), "--out", str(tmp_path)]) == 2
    assert "config error" in capsys.readouterr().err


def test_unknown_keys_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"model": "starobinsky", "qubits": [2], "mystery": 1}))
    assert run(["exact", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert "unknown config keys" in capsys.readouterr().err


def test_vqe_artifacts_and_budget_one(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "model": "starobinsky",
                "qubits": [2],
                "vqe": {"reps": 1, "budget": 1, "seed": 0},
            }
        )
    )
    assert run(["vqe", "--config", str(cfg), "--out", str(tmp_path)]) == 0
    payload = read_json(tmp_path / "vqe.json")
    assert payload["converged"] is False
    assert payload["n_evals"] == 1
    trace = (tmp_path / "vqe_trace.csv").read_text().splitlines()
    assert trace[0] == "eval,energy,elapsed_ms"
    assert len(trace) == 2


def test_vqe_trace_monotone(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "model": "starobinsky",
                "qubits": [2],
                "vqe": {"reps": 1, "budget": 120, "seed": 3, "optimizer": "nelder-mead"},
            }
        )
    )
    assert run(["vqe", "--config", str(cfg), "--out", str(tmp_path)]) == 0
    rows = (tmp_path / "vqe_trace.csv").read_text().splitlines()[1:]
    energies = [float(r.split(",")[1]) for r in rows]
    assert all(a >= b - 1e-15 for a, b in zip(energies, energies[1:]))
    payload = read_json(tmp_path / "vqe.json")
    assert payload["vqe"] >= payload["exact"] - 1e-9


def test_deterministic_outputs(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "model": "starobinsky",
                "qubits": [2],
                "vqe": {"reps": 1, "budget": 60, "seed": 5},
            }
        )
    )
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert run(["vqe", "--config", str(cfg), "--out", str(out1)]) == 0
    assert run(["vqe", "--config", str(cfg), "--out", str(out2)]) == 0
    assert (out1 / "vqe.json").read_bytes() == (out2 / "vqe.json").read_bytes()
    # trace CSV identical apart from the wall-clock column
    strip = lambda p: [",".join(r.split(",")[:2]) for r in (p / "vqe_trace.csv").read_text().splitlines()]
    assert strip(out1) == strip(out2)


def test_eoh_fig13(tmp_path):
    assert run(["eoh", "--preset", "fig13", "--out", str(tmp_path)]) == 0
    rows = (tmp_path / "eoh_profile.csv").read_text().splitlines()
    assert rows[0] == "tau,x_index,x_value,re_K,im_K,abs2_K"
    data = [r.split(",") for r in rows[1:]]
    by_tau = {}
    for tau, _idx, _x, _re, _im, a2 in data:
        by_tau.setdefault(float(tau), []).append(float(a2))
    for tau, weights in by_tau.items():
        assert sum(weights) == pytest.approx(1.0, abs=1e-9)
    # tau = 0: a single unit row
    nonzero0 = [w for w in by_tau[0.0] if w > 1e-12]
    assert len(nonzero0) == 1 and nonzero0[0] == pytest.approx(1.0)
    payload = read_json(tmp_path / "eoh.json")
    assert all(n == pytest.approx(1.0, abs=1e-9) for n in payload["norm"])


def test_eoh_deviation_shrinks_with_steps(tmp_path):
    devs = {}
    for steps in (16, 32, 64):
        out = tmp_path / str(steps)
        assert run(["eoh", "--preset", "fig13", "--steps", str(steps), "--out", str(out)]) == 0
        payload = read_json(out / "eoh.json")
        devs[steps] = max(payload["deviation_vs_exact"])
    assert devs[64] < devs[32] < devs[16]


def test_eoh_double_well_preset(tmp_path):
    assert run(["eoh", "--preset", "fig16", "--out", str(tmp_path)]) == 0
    payload = read_json(tmp_path / "eoh.json")
    assert all(n == pytest.approx(1.0, abs=1e-9) for n in payload["norm"])


def test_reproduce_table2(capsys):
    assert run(["reproduce", "table2"]) == 0
    out = capsys.readouterr().out
    assert "0.43791588" in out and "match" in out


def test_reproduce_tunneling(capsys):
    assert run(["reproduce", "tunneling"]) == 0
    out = capsys.readouterr().out
    assert "S_E_over_4" in out and "1534.44" in out


def test_reproduce_unknown_id(capsys):
    assert run(["reproduce", "tableX"]) == 2
    err = capsys.readouterr().err
    assert "known" in err and "table1" in err


def test_env_var_out_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("QCOSMO_OUT", str(tmp_path / "envout"))
    assert run(["exact", "--preset", "table1"]) == 0
    assert (tmp_path / "envout" / "exact.json").exists()


def test_qubit_and_basis_overrides(tmp_path):
    assert (
        run(
            [
                "exact",
                "--preset",
                "table2-4q",
                "--qubits",
                "5",
                "--out",
                str(tmp_path),
            ]
        )
        == 0
    )
    payload = read_json(tmp_path / "exact.json")
    assert payload["dim"] == 32
    assert payload["exact_ground"] == pytest.approx(0.00285585, rel=1e-5)
