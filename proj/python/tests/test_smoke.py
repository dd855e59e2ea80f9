import json
import math
import os
import subprocess

import numpy as np
import pytest

import _clonekit as ck


def test_bell_and_error_algebra():
    b00 = ck.bell_state(0, 0, 2)
    assert abs(b00[0] - 1 / math.sqrt(2)) < 1e-14
    assert abs(b00[3] - 1 / math.sqrt(2)) < 1e-14
    sx = ck.error_operator(1, 0, 2)
    assert np.allclose(sx, [[0, 1], [1, 0]])


def test_partial_trace_and_fidelity():
    b = ck.bell_state(0, 0, 3)
    rho = np.outer(b, b.conj())
    reduced = ck.partial_trace(rho, [3, 3], [0])
    assert np.allclose(reduced, np.eye(3) / 3)
    psi = np.array([1.0, 0.0, 0.0], dtype=complex)
    assert abs(ck.fidelity(reduced, psi, [3]) - 1 / 3) < 1e-12


def test_symmetric_projector_rank():
    p = ck.symmetric_projector(2, 3)
    assert abs(np.trace(p).real - ck.sym_dim(2, 3)) < 1e-10


def test_machine_fidelities():
    assert abs(ck.universal_nm_fidelity(2, 1, 2) - 5 / 6) < 1e-12
    assert abs(ck.universal_symmetric_fidelity(3) - 0.75) < 1e-12
    a = ck.universal_ansatz(2, 5 / 6)
    fa, fb = ck.ansatz_clone_fidelities(a, np.array([1.0, 0.0], dtype=complex))
    assert abs(fa - 5 / 6) < 1e-10
    assert abs(fb - 5 / 6) < 1e-10
    choi = ck.heisenberg_choi(a)
    tr_out = ck.partial_trace(choi, [2, 4], [0])
    assert np.allclose(tr_out, np.eye(2), atol=1e-9)


def test_cross_representation_paths():
    assert abs(ck.pdc_clone_fidelity(1, 2) - 5 / 6) < 1e-10
    assert abs(ck.symmetrization_clone_fidelity(2) - 5 / 6) < 1e-10
    assert ck.dc_qudit_fidelity_rational(2, 3, 2) == (11, 12)
    assert abs(ck.pc_qudit_12_fidelity(3) - (5 + math.sqrt(17)) / 12) < 1e-12


def test_sdp_solver():
    res = ck.solve_cloning_sdp("universal", 2)
    assert res["converged"] and res["certified"]
    assert abs(res["value"] - 5 / 6) < 1e-6
    assert res["worst_residual"] < 1e-7
    unot = ck.solve_cloning_sdp("unot", 1)
    assert abs(unot["value"] - 2 / 3) < 1e-6


def test_cv_suite():
    assert abs(ck.cv_nm_fidelity(2, 3) - 6 / 7) < 1e-12
    assert abs(ck.feedforward_clone_fidelity() - 2 / 3) < 1e-12
    f, gain = ck.finite_width_fidelity(10.0)
    assert abs(f - 42 / 61) < 1e-12
    assert abs(ck.balanced_conjugate_fidelity(1, 2) - 16 / 17) < 1e-12


def test_registry_surface():
    reg = ck.registry()
    assert len(reg) >= 25
    assert all(e["citation"] for e in reg)
    assert abs(ck.eval_formula("univ-12-d", {"d": 4}) - 0.7) < 1e-12
    with pytest.raises(ValueError):
        ck.eval_formula("cv-nm", {"N": 3, "M": 2})


def test_size_cap_exception():
    with pytest.raises(ck.SizeCapError):
        ck.symmetric_projector(2, 13)


# ---------------------------------------------------------------------------
# CLI surface (exit codes, determinism, formats)
# ---------------------------------------------------------------------------

CLI = os.environ.get("CLONEKIT_CLI")


def run_cli(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


@pytest.mark.skipif(CLI is None, reason="CLONEKIT_CLI not set")
def test_cli_fidelity_and_determinism():
    a = run_cli("fidelity", "--family", "universal", "--d", "2", "--n", "1", "--m", "2")
    b = run_cli("fidelity", "--family", "universal", "--d", "2", "--n", "1", "--m", "2")
    assert a.returncode == 0
    assert a.stdout == b.stdout  # byte-identical output
    row = a.stdout.splitlines()[1].split(",")
    assert abs(float(row[4]) - 5 / 6) < 1e-9
    assert float(row[6]) < 1e-9
    # at least 9 significant digits in numeric cells
    assert len(row[4].replace(".", "").lstrip("0")) >= 9


@pytest.mark.skipif(CLI is None, reason="CLONEKIT_CLI not set")
def test_cli_exit_codes():
    assert run_cli("fidelity", "--family", "nonsense").returncode == 2
    assert run_cli("fidelity", "--family", "cv", "--n", "3", "--m", "2").returncode == 2
    # size cap violation reports exit code 4
    big = run_cli("fidelity", "--family", "universal", "--d", "2", "--n", "5", "--m", "9")
    assert big.returncode == 4
    # raising the cap via the environment lets the same request through
    raised = run_cli("fidelity", "--family", "universal", "--d", "2", "--n", "5", "--m", "9",
                     env={"CLONEKIT_MAX_DIM": "20000"})
    assert raised.returncode == 0


@pytest.mark.skipif(CLI is None, reason="CLONEKIT_CLI not set")
def test_cli_registry_json():
    out = run_cli("registry", "--id", "entang")
    assert out.returncode == 0
    entries = json.loads(out.stdout)
    assert len(entries) == 2
    assert all(e["citation"] for e in entries)


@pytest.mark.skipif(CLI is None, reason="CLONEKIT_CLI not set")
def test_cli_simulate_report():
    out = run_cli("simulate", "pc-bs", "--r2", "0.7887")
    assert out.returncode == 0
    rep = json.loads(out.stdout)
    assert abs(rep["fidelity"] - 0.8536) < 1e-3
    assert abs(rep["success_probability"] - 1 / 3) < 1e-3
    assert rep["abs_delta"] < 1e-9
