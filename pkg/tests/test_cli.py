import json
import subprocess
import sys

import pytest

from sohilbert import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hvector_headline_text(capsys):
    code, out, _ = run(capsys, "hvector", "--t", "4", "--n", "6")
    assert code == 0
    assert "h_vector: (1, 3, 21, 20, 21, 3, 1)" in out
    assert "unimodal: False" in out and "gap: 1" in out and "palindrome: True" in out


def test_hvector_json_schema(capsys):
    code, out, _ = run(capsys, "hvector", "--t", "2", "--n", "4", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    for key in ("t", "n", "grading", "dim", "h_vector", "a_invariant_Y", "a_invariant_rescaled",
                "gorenstein_R", "palindrome", "unimodal", "gap", "prime", "seed"):
        assert key in rep
    assert rep["h_vector"] == [1, 9, 9, 1] and rep["unimodal"] is True and rep["gap"] == 0


def test_hvector_oracle_branch(capsys):
    code, out, _ = run(capsys, "hvector", "--t", "2", "--n", "3", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["h_vector"] == [1, 4, 1] and rep["cover_source"] == "oracle"
    assert rep["gap"] is None


def test_hvector_odd_t_tables(capsys):
    code, out, _ = run(capsys, "hvector", "--t", "1", "--n", "3", "--format", "json", "--max-deg", "3")
    rep = json.loads(out)
    assert code == 0 and rep["h_vector"] is None
    assert rep["hilbert_table_cover"] == [1, 3, 6, 10]
    assert rep["hilbert_table_R"] == [1, 0, 6, 0]


def test_hvector_invalid(capsys):
    code, _, err = run(capsys, "hvector", "--t", "4", "--n", "4")
    assert code == 2 and "t <= n-1" in err


def test_scan_gaps(capsys):
    code, out, _ = run(capsys, "scan", "--m-min", "1", "--m-max", "3", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["gap"] for r in rows] == [0, 1, 2]
    code, out, _ = run(capsys, "scan", "--m-min", "2", "--m-max", "2", "--format", "csv")
    assert '"(1, 3, 21, 20, 21, 3, 1)"' in out
    code, out, _ = run(capsys, "scan", "--m-min", "6", "--m-max", "6", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["gap"] == 5 and row["unimodal"] is False


@pytest.mark.parametrize("bounds", [("0", "2"), ("3", "2"), ("1", "9")])
def test_scan_bad_range(capsys, bounds):
    code, _, _ = run(capsys, "scan", "--m-min", bounds[0], "--m-max", bounds[1])
    assert code == 2


def test_scan_mismatch_exit_code(capsys, monkeypatch):
    from sohilbert import cover

    def broken(m, **kw):
        raise cover.CoverError("gap 7 != m - 1")

    monkeypatch.setattr(cli, "family_report", broken)
    code, _, _ = run(capsys, "scan", "--m-min", "1", "--m-max", "2")
    assert code == 1


@pytest.mark.parametrize("t,n,deg", [(1, 3, 3), (2, 3, 2)])
def test_verify_pass(capsys, t, n, deg):
    code, out, _ = run(capsys, "verify", "--t", str(t), "--n", str(n), "--max-deg", str(deg), "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    if (t, n) == (2, 3):
        assert rep["checks"][1]["oracle"] == [1, 9, 36]


def test_verify_mismatch(capsys, monkeypatch):
    from sohilbert.series import series

    monkeypatch.setattr(cli, "h_poly_R", lambda *a, **k: series((1, 2, 1), 5))
    code, _, err = run(capsys, "verify", "--t", "2", "--n", "3", "--max-deg", "2")
    assert code == 1 and "degree 1" in err


def test_verify_guard(capsys):
    code, _, err = run(capsys, "verify", "--t", "4", "--n", "6", "--max-deg", "3", "--guard-ambient", "1000")
    assert code == 2 and "exceeds guard" in err


def test_invariance(capsys):
    code, out, _ = run(capsys, "invariance", "--t", "2", "--n", "3", "--samples", "20", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["so_fixed"] == 20 and rep["reflection_sign"] == 20 and rep["delta_identity"]
    code, out, _ = run(capsys, "invariance", "--t", "1", "--n", "5", "--samples", "10")
    assert code == 0


def test_bad_prime(capsys):
    code, _, _ = run(capsys, "hvector", "--t", "2", "--n", "4", "--prime", "15")
    assert code == 2


def test_rerun_is_byte_identical():
    cmd = [sys.executable, "-m", "sohilbert", "verify", "--t", "2", "--n", "4", "--max-deg", "2",
           "--format", "json", "--seed", "9"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b'"seed": 9' in a
