"""CLI contract: subcommands, exit codes, JSON schema, determinism."""

import json

import pytest

from leavitt.cli import main
from leavitt.fixtures import fixture_from_json


def run(capsys, *argv, env=None, monkeypatch=None):
    if env:
        for key, value in env.items():
            monkeypatch.setenv(key, value)
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# profile


def test_profile_pretty(capsys):
    code, out, _ = run(capsys, "profile", "--n", "35", "--d", "13")
    assert code == 0
    assert "q=2 r=9 s=5" in out
    assert "h-sequence: 1, 6, 11" in out


def test_profile_json_keys(capsys):
    code, out, _ = run(capsys, "profile", "--n", "35", "--d", "13", "--json")
    assert code == 0
    doc = json.loads(out)
    for key in ("n", "d", "q", "r", "s", "hseq", "useq", "s1hat", "s2hat"):
        assert key in doc
    assert all(key == key.lower() for key in doc)


def test_profile_not_coprime_is_usage_error(capsys):
    code, _, err = run(capsys, "profile", "--n", "5", "--d", "2")
    assert code == 64
    assert "error" in err


# ---------------------------------------------------------------------------
# construct


def test_construct_pretty_lists_matrices(capsys):
    code, out, _ = run(capsys, "construct", "--n", "5", "--d", "3")
    assert code == 0
    assert "X_1 =" in out and "X_5 =" in out
    assert "(Y_i = X_i*)" in out


def test_construct_json_round_trips(capsys):
    code, out, _ = run(capsys, "construct", "--n", "5", "--d", "3", "--json")
    assert code == 0
    gens = fixture_from_json(json.loads(out))
    assert (gens.n, gens.d) == (5, 3)


def test_construct_seeded_output_is_deterministic(capsys):
    args = ("construct", "--n", "7", "--d", "5", "--placement", "random", "--seed", "11", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_construct_graded_requires_divisibility(capsys):
    code, _, err = run(capsys, "construct", "--n", "5", "--d", "3", "--graded")
    assert code == 64
    assert "error" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_constructed_set_certifies(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--d", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["relations_ok"] is True
    assert doc["generation"] == "certified"


def test_verify_closure_path(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--d", "3", "--closure", "--json")
    assert code == 0
    assert json.loads(out)["generation"] == "verified"


def test_verify_fixture_inconclusive_exit_2(capsys):
    code, out, _ = run(
        capsys, "verify", "--fixture", "M3L5-lex", "--iteration-bound", "3", "--json"
    )
    assert code == 2
    assert json.loads(out)["generation"] == "inconclusive"


def test_verify_set_file_and_relation_failure(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--n", "5", "--d", "3", "--json")
    doc = json.loads(out)
    # corrupt one entry so X_1 Y_1 != I
    doc["X"][0]["entries"][0][0]["x"] = [2]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--set", str(path), "--json")
    assert code == 1
    assert json.loads(out)["relations_ok"] is False


def test_verify_missing_arguments_is_usage_error(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 64


def test_verify_exports_certificate(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, _, _ = run(
        capsys, "verify", "--n", "5", "--d", "3", "--export-certificate", str(path)
    )
    assert code == 0
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert doc["n"] == 5 and doc["d"] == 3
    ops = {node["op"] for node in doc["nodes"]}
    assert ops <= {"X", "Y", "mul", "lin"}


def test_verify_prime_field_env(capsys, monkeypatch):
    code, out, _ = run(
        capsys, "verify", "--n", "5", "--d", "3", "--json",
        env={"LEAVITT_FIELD": "fp5"}, monkeypatch=monkeypatch,
    )
    assert code == 0
    assert json.loads(out)["generation"] == "certified"


def test_bad_field_env_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("LEAVITT_FIELD", "octonion")
    with pytest.raises(SystemExit):
        main(["construct", "--n", "5", "--d", "3"])


# ---------------------------------------------------------------------------
# classify


def test_classify_pretty(capsys):
    code, out, _ = run(capsys, "classify", "--n", "5", "--d", "3")
    assert code == 0
    assert "K0 data of M_3(L_5)" in out


def test_classify_comparison(capsys):
    code, out, _ = run(capsys, "classify", "--n", "5", "--d", "3", "--m", "5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["isomorphic"] is True
    assert doc["reason"] == "k0-unit-orbit"
    code, out, _ = run(capsys, "classify", "--n", "5", "--d", "2", "--m", "5", "--json")
    doc = json.loads(out)
    assert doc["isomorphic"] is False


def test_classify_json_lower_snake_case(capsys):
    code, out, _ = run(capsys, "classify", "--n", "6", "--d", "4", "--json")
    doc = json.loads(out)
    for key in doc:
        assert key == key.lower()
        assert " " not in key and "-" not in key


# ---------------------------------------------------------------------------
# usage


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 64


def test_missing_required_option_is_usage_error(capsys):
    code, _, _ = run(capsys, "profile", "--n", "5")
    assert code == 64
