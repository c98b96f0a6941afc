import json
import os
import subprocess
import sys

import pytest

from ninthpoint.cli import main

PRIME_DOC = {
    "points": [
        ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"],
        ["1", "2", "3"], ["1", "5", "7"], ["1", "11", "13"], ["1", "17", "19"],
    ]
}


@pytest.fixture
def prime_file(tmp_path):
    path = tmp_path / "points.json"
    path.write_text(json.dumps(PRIME_DOC))
    return str(path)


def run_main(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_success(capsys, prime_file):
    code, out, _ = run_main(capsys, ["compute", "--points", prime_file])
    assert code == 0
    payload = json.loads(out)
    assert payload["p9"] == ["196511", "126161", "112711"]
    assert payload["certification"]["certified"] is True


def test_compute_method_and_triple_flags(capsys, prime_file):
    code, out, _ = run_main(
        capsys, ["compute", "--points", prime_file, "--method", "reduced", "--triple", "2,4,5"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["p9"] == ["196511", "126161", "112711"]
    assert payload["triple"] == [2, 4, 5]


def test_compute_degenerate_exit_code(capsys, tmp_path):
    doc = json.loads(json.dumps(PRIME_DOC))
    doc["points"][1] = ["1", "0", "0"]
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_main(capsys, ["compute", "--points", str(path)])
    assert code == 1
    assert json.loads(out)["p9"] is None


def test_compute_parse_error_exit_code(capsys, tmp_path):
    doc = json.loads(json.dumps(PRIME_DOC))
    doc["points"][6] = ["1", "1/0", "3"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_main(capsys, ["compute", "--points", str(path)])
    assert code == 2
    assert "points[7][y]" in err


def test_compute_missing_file(capsys):
    code, _, err = run_main(capsys, ["compute", "--points", "/nonexistent.json"])
    assert code == 2
    assert "no such file" in err


def test_no_arguments_usage(capsys):
    code, _, err = run_main(capsys, [])
    assert code == 2
    assert "usage" in err.lower()


def test_bad_method_usage_exit():
    with pytest.raises(SystemExit) as err:
        main(["compute", "--points", "x.json", "--method", "quadrature"])
    assert err.value.code == 2


def test_verify_subcommand(capsys):
    code, out, _ = run_main(
        capsys, ["verify", "--which", "conic-expansion", "--trials", "5", "--seed", "3", "--bound", "9"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert payload["trials"] == 5


def test_verify_all_smoke(capsys):
    code, out, _ = run_main(capsys, ["verify", "--trials", "1", "--seed", "4", "--bound", "8"])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert len(payload["suites"]) == 12


def test_cb_seed_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("CB_SEED", "77")
    code1, out1, _ = run_main(capsys, ["verify", "--which", "fano-cyclic", "--trials", "2"])
    code2, out2, _ = run_main(capsys, ["verify", "--which", "fano-cyclic", "--trials", "2"])
    assert code1 == code2 == 0
    assert json.loads(out1)["seed"] == 77
    assert out1 == out2


def test_trop_subcommand(capsys):
    code, out, _ = run_main(capsys, ["trop", "--prime", "3", "--trials", "4", "--seed", "5"])
    assert code == 0
    payload = json.loads(out)
    assert payload["prime"] == 3
    assert payload["soundness_violations"] == 0


def test_newton_subcommand_support_only(capsys):
    code, out, _ = run_main(capsys, ["newton", "--poly", "Cx", "--support-only"])
    assert code == 0
    payload = json.loads(out)
    assert payload["support_size"] == 120
    assert "vertices" not in payload


def test_bench_subcommand(capsys):
    code, out, err = run_main(capsys, ["bench", "--configs", "1", "--seed", "6"])
    assert code == 0
    payload = json.loads(out)
    assert payload["monomial_evaluations"] == {"fano_reduced": 2880, "fano_full": 40320}
    assert payload["methods_agree"] is True
    assert "fano_full" in err  # timings go to stderr


def test_stdout_bytes_identical_across_processes(prime_file):
    env = dict(os.environ)
    cmd = [sys.executable, "-m", "ninthpoint.cli", "compute", "--points", prime_file]
    a = subprocess.run(cmd, capture_output=True, env=env)
    b = subprocess.run(cmd, capture_output=True, env=env)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.endswith(b"\n")
