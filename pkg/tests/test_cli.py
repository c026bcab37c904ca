import json

import pytest

from classes.Cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, Cli

M_OF_Y = [
    "--fn",
    "M/1",
    "--rho",
    "M(y)*u",
    "--sigma",
    "(u[3,0] + a*u[0,1] + f(u, u[1,0]))*M(y)",
]

EXPONENTIAL = [
    "--fn",
    "F/1",
    "--eq",
    "gir(a=a, f=2*u*u[1,0] + u^2)",
    "--rho",
    "exp(x + t)*F(a*t + y)*u",
    "--sigma",
    "-(u[2,0] - u[1,0] + u^2 + u)*exp(x + t)*F(a*t + y)"
    " + (u[3,0] + a*u[0,1] + 2*u*u[1,0] + u^2)*exp(x + t)*F(a*t + y)",
    "--zeta",
    "-a*u*exp(x + t)*F(a*t + y)",
]


def run(argv, environ=None):
    return Cli(environ=environ or {}).run(argv)


def test_verify_accepts_a_law(capsys):
    assert run(["verify", *M_OF_Y]) == EXIT_OK
    out = capsys.readouterr().out
    assert "zero" in out
    assert "M(y)" in out


def test_verify_json_report(capsys):
    assert run(["verify", "--json", *M_OF_Y]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["suite"] == "verify"
    (case,) = report["cases"]
    assert case["id"] == "verify"
    assert case["verdict"] == "zero"
    assert case["residual"] == "0"
    assert case["passed"] is True
    assert set(case) >= {"id", "verdict", "residual", "millis"}


def test_verify_rejects_a_non_law(capsys):
    assert run(["verify", "--rho", "u^2"]) == EXIT_FAILED
    assert "nonzero" in capsys.readouterr().out
def test_verify_concrete_exponential_law(capsys):
    assert run(["verify", "--json", *EXPONENTIAL]) == EXIT_OK
    (case,) = json.loads(capsys.readouterr().out)["cases"]
    assert case["verdict"] == "zero"
    assert case["residual"] == "0"


def test_verify_concrete_exponential_without_its_flux(capsys):
    assert run(["verify", *EXPONENTIAL[:-2]]) == EXIT_FAILED
    assert "nonzero" in capsys.readouterr().out


def test_euler(capsys):
    assert run(["euler", "u[1,0]^2/2"]) == EXIT_OK
    assert "-u[2,0]" in capsys.readouterr().out


def test_cosym(capsys):
    assert run(["cosym", "--fn", "M/1", "--gamma", "M(y)"]) == EXIT_OK
    assert run(["cosym", "--eq", "gir(a=1, f=u[1,0]^2)", "--gamma", "x"]) == EXIT_FAILED
    assert "-2*u[2,0]" in capsys.readouterr().out


def test_sym():
    assert run(["sym", "--char", "u[1,0]"]) == EXIT_OK
    assert run(["sym", "--char", "1"]) == EXIT_FAILED


def test_noether_scan_json(capsys):
    argv = ["noether-scan", "--json", "--rmax", "0", "--smax", "0", "--order", "0"]
    assert run(argv) == EXIT_OK
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    (case,) = report["cases"]
    assert case["verdict"] == "forced-zero"
    assert case["inputs"]["chain"] == "p_0_0"
    assert "Scanning" in captured.err


def test_inverse_noether_scan_traces_steps(capsys):
    argv = ["noether-scan", "-v", "--inverse", "--rmax", "0", "--smax", "0", "--order", "0"]
    assert run(argv) == EXIT_OK
    assert "-2*b_0_0 -> 0" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["noether-scan", "--adjoint-left"],
        ["noether-scan", "--rmax", "-1"],
        ["verify", "--rho", "x $"],
        ["verify", "--rho", "u", "--eq", "heat(a=1)"],
        ["verify", "--rho", "u", "--fn", "M"],
        ["cosym", "--gamma", "M(y)"],
        ["frobnicate"],
        [],
        ["suite", "ir", "--case", "no.such.case"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE
    err = capsys.readouterr().err
    assert err


def test_error_messages_go_to_stderr(capsys):
    run(["verify", "--rho", "x $"])
    captured = capsys.readouterr()
    assert "Error:" in captured.err
    assert "Error:" not in captured.out


def test_bad_jobs_environment():
    assert run(["suite", "ir", "--list"], environ={"JETLAW_JOBS": "zero"}) == EXIT_USAGE


def test_suite_listing(capsys):
    assert run(["suite", "ir", "--list"]) == EXIT_OK
    ids = capsys.readouterr().out.split()
    assert "law.m-of-y" in ids
    assert "noether.scan" in ids
    assert ids == sorted(ids)


def test_suite_selection_json(capsys):
    argv = ["suite", "ir", "--json", "--no-timing", "--case", "law.m-of-y", "--case", "ks.reduction"]
    assert run(argv, environ={"JETLAW_JOBS": "2"}) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["suite"] == "ir"
    assert [case["id"] for case in report["cases"]] == ["ks.reduction", "law.m-of-y"]
    assert all(case["millis"] == 0 for case in report["cases"])
    assert report["notes"]


def test_quiet_suppresses_output(capsys):
    assert run(["sym", "-q", "--char", "u[1,0]"]) == EXIT_OK
    assert capsys.readouterr().out == ""
