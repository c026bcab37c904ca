import io

import pytest

from classes.Console import Console
from classes.Errors import JetlawError
from classes.RunConfig import JOBS_ENV, RunConfig


def test_jobs_default_to_one():
    assert RunConfig(environ={}).jobs == 1


def test_jobs_flag_wins_over_environment():
    assert RunConfig(jobs=3, environ={JOBS_ENV: "5"}).jobs == 3
    assert RunConfig(environ={JOBS_ENV: " 5 "}).jobs == 5


@pytest.mark.parametrize("flag, value", [(0, None), (None, "0"), (None, "many"), (-2, "4")])
def test_bad_job_counts(flag, value):
    environ = {} if value is None else {JOBS_ENV: value}
    with pytest.raises(JetlawError):
        RunConfig(jobs=flag, environ=environ)


def test_function_table_from_declarations():
    table = RunConfig(functions=["M/1", "F/2"], environ={}).function_table()
    assert table.arity("M") == 1
    assert table.arity("F") == 2


def test_console_rows_and_quiet_mode(capsys):
    stream = io.StringIO()
    console = Console(stream=stream)
    console.item("Cases:", "3")
    console.verdict("law.m-of-y", "zero", "zero", 1.5)
    console.debug("hidden")
    text = stream.getvalue()
    assert "Cases:" in text and "3" in text
    assert "1.5 ms" in text
    assert "hidden" not in text

    quiet = Console(quiet=True, stream=stream)
    quiet.header("nothing")
    quiet.error("shown")
    assert "nothing" not in stream.getvalue()
    assert "Error: shown" in capsys.readouterr().err
