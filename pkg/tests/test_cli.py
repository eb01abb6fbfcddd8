"""Tests for the command-line entry point."""

import json

import pytest

import cli.fk_dispatch
from cli.common import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED
from finite_field import make_field
from fixedfield import generator_closed_form
from rational import RationalFunction
from run import main


def test_generator_text(capsys):
    assert main(["--p", "2", "--n", "1", "generator"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Field: F_2 (p = 2, n = 1)" in out
    assert "f_3 = (x^6+x^5+x^3+x+1) / (x^4+x^2)" in out
    assert "[F(x):F(f_3)] = 6" in out
    assert "All 5 checks passed" in out


def test_generator_json_with_modulus(capsys):
    argv = ["--p", "2", "--n", "2", "--modulus", "1,1,1", "generator", "--method", "closed", "--format", "json"]
    assert main(argv) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["field"] == {"p": 2, "n": 2, "modulus": [1, 1, 1]}
    assert record["command"] == "generator"
    assert record["result"]["degree"] == 60
    assert all(verdict["pass"] for verdict in record["verdicts"])


def test_fk_json_round_trip(capsys):
    assert main(["--p", "3", "--n", "1", "fk", "--k", "8", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["result"]["methods"] == ["direct", "factored", "closed"]
    spec = make_field(3)
    f_k = RationalFunction.from_json(spec, record["result"]["f_k"])
    assert f_k == RationalFunction(*generator_closed_form(spec))
    assert record["verdicts"] == [
        {"name": "methods_agree", "pass": True, "detail": "compared direct, factored, closed"}
    ]


def test_fk_direct_only(capsys):
    assert main(["--p", "3", "--n", "1", "fk", "--k", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Methods: direct" in out
    assert "f_3 = " in out


def test_group_listing(capsys):
    assert main(["--p", "2", "--n", "1", "group"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "x -> 1 / (x+1)" in out
    assert "x -> (x+1) / x" in out
    assert "6 maps" in out
    assert "PASS group_order" in out


def test_verify(capsys):
    assert main(["--p", "2", "--n", "1", "verify", "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["result"]["failed"] == []
    assert record["result"]["passed"] == record["result"]["checks"]


@pytest.mark.parametrize(
    "method, compared",
    [("direct", "direct, closed_form"), ("closed", "closed_form, direct"), ("all", "direct, factored, closed_form")],
)
def test_verify_with_method(method, compared, capsys):
    assert main(["--p", "2", "--n", "1", "verify", "--method", method, "--format", "json"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["result"]["failed"] == []
    verdicts = {verdict["name"]: verdict for verdict in record["verdicts"]}
    assert verdicts["methods_agree"]["detail"].startswith(f"compared {compared}: ")


def test_fk_exhaustive_checks_invariance(capsys):
    assert main(["--p", "3", "--n", "1", "fk", "--k", "3", "--exhaustive"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Methods: direct" in out
    assert "PASS invariant_under_group: all group elements" in out


def test_group_accepts_method_and_exhaustive(capsys):
    assert main(["--p", "2", "--n", "1", "group", "--method", "all", "--exhaustive"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "6 maps" in out
    assert "PASS generator_closure" in out
    assert "All 2 checks passed" in out


def test_group_ignores_method(capsys):
    assert main(["--p", "2", "--n", "1", "group", "--method", "direct"]) == EXIT_OK
    assert "All 1 checks passed" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["--p", "4", "--n", "1", "group"],
        ["--p", "2", "--n", "2", "--modulus", "1,0,1", "group"],
        ["--p", "2", "--n", "1", "--modulus", "x", "group"],
        ["--p", "3", "--n", "1", "fk", "--k", "3", "--method", "factored"],
        ["--p", "3", "--n", "1", "fk", "--k", "4", "--method", "closed"],
        ["--p", "3", "--n", "1", "fk", "--k", "0"],
        ["--p", "3", "--n", "1", "generator", "--max-workers", "0"],
        ["--p", "3", "--n", "1", "curve"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == EXIT_USAGE


def test_factored_usage_error_cites_precondition(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--p", "3", "--n", "1", "fk", "--k", "3", "--method", "factored"])
    assert excinfo.value.code == EXIT_USAGE
    err = capsys.readouterr().err
    assert "The factored form (Lemma 4) requires (q-1) | k; q-1 = 2 does not divide 3." in err


def test_disagreement_exits_with_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli.fk_dispatch, "f_k_factored", lambda spec, k: RationalFunction.x(spec))
    assert main(["--p", "3", "--n", "1", "fk", "--k", "2"]) == EXIT_VERIFICATION_FAILED
    out = capsys.readouterr().out
    assert "FAIL methods_agree" in out
    assert "1 of 1 checks failed: methods_agree" in out
