import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from helpers import EX44_TEXT, HAMMING74_TEXT
from jacobiforge import JacobiTable, RefSet, higher_jacobi, parse_code

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, timeout=120):
    env = dict(os.environ, PYTHONPATH=SRC)
    return subprocess.run(
        [sys.executable, "-m", "jacobiforge", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=timeout,
    )


@pytest.fixture()
def ex44_path(tmp_path):
    path = tmp_path / "ex44.txt"
    path.write_text(EX44_TEXT)
    return str(path)


@pytest.fixture()
def hamming_path(tmp_path):
    path = tmp_path / "ham.txt"
    path.write_text(HAMMING74_TEXT)
    return str(path)


def test_hjacobi_golden_output(ex44_path):
    res = run_cli("hjacobi", "--code", ex44_path, "-r", "2", "-T", "1")
    assert res.returncode == 0
    assert res.stdout.strip() == "w*x*y^4 + 2*z*x^2*y^3 + 4*z*y^5"


def test_rank_validation_exit_code(ex44_path):
    res = run_cli("hjacobi", "--code", ex44_path, "-r", "5", "-T", "1")
    assert res.returncode == 2
    assert "r exceeds dimension k=3" in res.stderr


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("q=2 n=3\n01\n")
    res = run_cli("wenum", "--code", str(bad))
    assert res.returncode == 2
    assert "error" in res.stderr


def test_wenum_and_hwenum(ex44_path):
    assert run_cli("wenum", "--code", ex44_path).stdout.strip() == (
        "x^6 + 3*x^4*y^2 + 3*x^2*y^4 + y^6"
    )
    assert run_cli("hwenum", "--code", ex44_path, "-r", "2").stdout.strip() == (
        "3*x^2*y^4 + 4*y^6"
    )


def test_json_roundtrip(ex44_path):
    res = run_cli("hjacobi", "--code", ex44_path, "-r", "1", "-T", "2,4", "--json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    table = JacobiTable.from_json_dict(data)
    code = parse_code(EX44_TEXT)
    assert table == higher_jacobi(code, RefSet.of(6, [2, 4]), 1)


def test_ejacobi(ex44_path):
    res = run_cli("ejacobi", "--code", ex44_path, "-m", "2", "-T", "")
    assert res.returncode == 0
    assert res.stdout.strip() == "x^6 + 9*x^4*y^2 + 27*x^2*y^4 + 27*y^6"


def test_jacobi_subcommand(ex44_path):
    res = run_cli("jacobi", "--code", ex44_path, "-T", "1")
    assert res.returncode == 0
    assert res.stdout.strip() == (
        "w*x^5 + 2*w*x^3*y^2 + w*x*y^4 + z*x^4*y + 2*z*x^2*y^3 + z*y^5"
    )


def test_guard_flag_exit_code(hamming_path):
    res = run_cli("hjacobi", "--code", hamming_path, "-r", "2", "-T", "1", "--max-subcodes", "5")
    assert res.returncode == 2
    assert "TooLarge" in res.stderr


def test_mw_check_non_self_dual(hamming_path):
    res = run_cli("mw-check", "--code", hamming_path, "--kind", "hjac", "-r", "1", "-T", "3")
    assert res.returncode == 0
    assert "EQUAL" in res.stdout


def test_mw_check_equal(ex44_path):
    for kind, flag, val in (("hjac", "-r", "2"), ("ejac", "-m", "2"), ("hw", "-r", "1")):
        res = run_cli(
            "mw-check", "--code", ex44_path, "--kind", kind, flag, val, "-T", "1"
        )
        assert res.returncode == 0, res.stderr
        assert "EQUAL" in res.stdout


def test_design_check_output(ex44_path):
    res = run_cli("design-check", "--code", ex44_path, "-r", "1", "-t", "1")
    assert res.returncode == 0
    lines = res.stdout.strip().splitlines()
    assert lines == [
        "i=2: 1-design lambda=1",
        "i=4: 1-design lambda=2",
        "i=6: 1-design lambda=1",
    ]


def test_polarize_ok_and_hypothesis_failure(ex44_path):
    res = run_cli("polarize", "--code", ex44_path, "-r", "2", "-t", "1")
    assert res.returncode == 0
    assert res.stdout.strip() == "w*x*y^4 + 2*z*x^2*y^3 + 4*z*y^5"
    res = run_cli("polarize", "--code", ex44_path, "-r", "1", "-t", "2")
    assert res.returncode == 1
    assert "DesignHypothesisFails" in res.stdout


def test_harm_wenum(ex44_path):
    res = run_cli("harm-wenum", "--code", ex44_path, "-r", "1", "-d", "1")
    assert res.returncode == 0
    assert res.stdout.strip() == "0"


def test_hahn_subcommand():
    res = run_cli("hahn", "-m", "1", "-x", "1", "--alpha", "-6", "--beta", "-2", "-N", "2")
    assert res.returncode == 0
    assert res.stdout.strip() == "-1/5"


def test_recover_equal(hamming_path):
    res = run_cli("recover", "--code", hamming_path, "-r", "1", "-T", "1,2")
    assert res.returncode == 0
    assert "EQUAL" in res.stdout


def test_verify_passes_and_is_deterministic(ex44_path):
    first = run_cli("verify", "--code", ex44_path, "--all")
    assert first.returncode == 0, first.stdout + first.stderr
    assert "PASS" in first.stdout and "FAIL" not in first.stdout
    second = run_cli("verify", "--code", ex44_path, "--all")
    assert second.stdout == first.stdout
    parallel = run_cli("verify", "--code", ex44_path, "--all", "--jobs", "3")
    assert parallel.returncode == 0
    assert parallel.stdout == first.stdout
