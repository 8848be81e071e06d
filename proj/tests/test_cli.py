"""Behavioural tests for the command-line tool (exit codes, formats)."""

import json
import os
import subprocess

CLI = os.environ["TREEMAPS_CLI"]


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_series_json():
    r = run("series", "--n", "1", "--q", "2", "--format", "json")
    assert r.returncode == 0, r.stderr
    rep = json.loads(r.stdout)
    assert rep["command"] == "series"
    assert rep["series"]["coeffs"] == {"1": "1", "3": "2"}
    assert rep["pairing_total"] == "3"
    assert rep["d"] == 2


def test_series_path_shape():
    r = run("series", "--n", "3", "--q", "0,0,0", "--s", "path:1,1", "--format", "json")
    assert r.returncode == 0, r.stderr
    rep = json.loads(r.stdout)
    assert rep["series"]["coeffs"] == {"1": "2"}


def test_series_star_equals_explicit():
    a = run("series", "--q", "0,0,0", "--s", "star:1,2", "--format", "json")
    b = run("series", "--q", "0,0,0", "--s", "0,1,2", "--format", "json")
    assert a.returncode == b.returncode == 0
    assert json.loads(a.stdout)["series"] == json.loads(b.stdout)["series"]


def test_series_verified():
    r = run("series", "--q", "1,1", "--s", "1", "--verify", "full")
    assert r.returncode == 0, r.stderr


def test_non_tree_is_a_precondition_failure():
    r = run("series", "--n", "3", "--q", "0,0,0", "--s", "1,1,1")
    assert r.returncode == 2
    assert "precondition" in r.stderr


def test_zero_degree_row_is_a_precondition_failure():
    r = run("series", "--n", "1", "--q", "0")
    assert r.returncode == 2


def test_oracle_csv():
    r = run("oracle", "--n", "1", "--q", "3", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout == "L,count\n2,10\n4,5\n"


def test_oracle_cap():
    r = run("oracle", "--n", "1", "--q", "9")
    assert r.returncode == 3
    assert "cap" in r.stderr


def test_oracle_cap_env_override():
    ok = run("oracle", "--n", "1", "--q", "3")
    assert ok.returncode == 0
    capped = run("oracle", "--n", "1", "--q", "3", env_extra={"TREEMAPS_CAP_D": "2"})
    assert capped.returncode == 3


def test_oracle_paired_functions():
    r = run("oracle", "--n", "1", "--q", "2", "--K", "1,2", "--format", "json")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["paired_functions"] == {"1": "3", "2": "18"}


def test_verify_pass_and_json():
    r = run("verify", "hz", "--qmax", "3", "--format", "json")
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["failed"] == 0
    assert rep["passed"] > 0


def test_verify_unknown_suite():
    r = run("verify", "nonsense")
    assert r.returncode == 2


def test_verify_jobs_deterministic():
    a = run("verify", "zeta", "--Kmax", "2", "--format", "json")
    b = run("verify", "zeta", "--K", "2", "--jobs", "4", "--format", "json")
    assert a.returncode == b.returncode == 0
    assert json.loads(a.stdout) == json.loads(b.stdout)


def test_series_binomial_basis():
    r = run("series", "--n", "1", "--q", "2", "--basis", "binomial")
    assert r.returncode == 0
    assert "C(x,1): 3" in r.stdout
    assert "C(x,2): 12" in r.stdout
    assert "C(x,3): 12" in r.stdout


def test_substructure_count():
    r = run("substructure-count", "lambda", "--x", "1,0", "--p", "1",
            "--r1", "1", "--r2", "1", "--format", "json")
    assert r.returncode == 0, r.stderr
    rep = json.loads(r.stdout)
    assert rep["closed_form"] == "1"
    assert rep["brute"] == "1"
    assert rep["match"] is True


def test_substructure_count_delta():
    r = run("substructure-count", "delta", "--w1", "1,1,1", "--marks1", "1,2,3",
            "--r2", "2", "--format", "json")
    assert r.returncode == 0, r.stderr
    rep = json.loads(r.stdout)
    assert rep["match"] is True
    assert rep["closed_form"] == "12"  # 3! * C(2,1)


def test_substructure_count_gamma():
    r = run("substructure-count", "gamma", "--w1", "1,1", "--w2", "1,1",
            "--marks1", "1", "--marks2", "1", "--format", "json")
    assert r.returncode == 0, r.stderr
    assert json.loads(r.stdout)["match"] is True
