"""Output-mode resolution, canonical JSON and envelope shape."""

import json
from fractions import Fraction

import click
import numpy as np
import pytest
from click.testing import CliRunner

from tits.alternative.algebra import pi_times
from tits.alternative.cli.errors import EXIT_ANALYSIS, EXIT_INPUT, AnalysisFailedError, InputError, translated_errors
from tits.alternative.cli.main import global_options
from tits.alternative.cli.output import (
    OutputMode,
    canonical,
    default_output_mode,
    dumps,
    emit,
    render_error,
    resolve_output_mode,
    set_output_mode,
)
from tits.alternative.exceptions import BudgetTooSmall, UnknownVertex


def test_default_is_text_at_a_terminal(monkeypatch):
    monkeypatch.setattr("sys.stdout.isatty", lambda: True, raising=False)
    assert default_output_mode() is OutputMode.TEXT


def test_default_is_json_when_redirected(monkeypatch):
    monkeypatch.setattr("sys.stdout.isatty", lambda: False, raising=False)
    assert default_output_mode() is OutputMode.JSON


@pytest.mark.parametrize("explicit", ["text", "json"])
def test_explicit_output_wins_over_detection(explicit, monkeypatch):
    monkeypatch.setattr("sys.stdout.isatty", lambda: True, raising=False)
    assert resolve_output_mode(explicit) is OutputMode(explicit)


def test_success_envelope_is_stable(capsys):
    emit({"count": 2}, OutputMode.JSON)
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"ok": True, "data": {"count": 2}}


def test_text_mode_prefers_the_human_rendering(capsys):
    emit({"count": 2}, OutputMode.TEXT, text="two things")
    assert capsys.readouterr().out.strip() == "two things"


class TestCanonical:
    def test_angles_carry_their_exact_form(self):
        assert canonical(pi_times("2/3")) == {"pi": "2/3", "display": "2π/3"}

    def test_floats_are_rounded(self):
        assert canonical(0.1 + 0.2, digits=12) == 0.3
        assert canonical(float("inf")) == "inf"
        assert canonical(-0.0) == 0.0

    def test_numpy_and_fractions(self):
        assert canonical(np.array([[1.0, 2.5]])) == [[1.0, 2.5]]
        assert canonical(np.int64(3)) == 3
        assert canonical(Fraction(1, 3)) == "1/3"

    def test_sets_are_sorted(self):
        assert canonical({"b", "a"}) == ["a", "b"]

    def test_dumps_sorts_keys(self):
        assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')


def test_error_envelope_carries_a_machine_readable_code():
    error = InputError("nope", hint=["do this"], data={"a": 1})
    payload = json.loads(render_error(error, OutputMode.JSON))
    assert payload["ok"] is False
    assert payload["error"]["code"] == "invalid_input"
    assert payload["error"]["hint"] == ["do this"]
    assert payload["error"]["data"] == {"a": 1}


def test_error_text_names_the_code_and_the_fix():
    rendered = render_error(AnalysisFailedError("girth too short", hint=["inspect the links"]), OutputMode.TEXT)
    assert "[analysis_failed]" in rendered
    assert "inspect the links" in rendered


class TestTranslatedErrors:
    def test_input_errors_exit_2(self):
        with pytest.raises(InputError) as excinfo, translated_errors():
            raise UnknownVertex("q")
        assert excinfo.value.exit_code == EXIT_INPUT
        assert excinfo.value.data["exception"] == "UnknownVertex"

    def test_analysis_errors_exit_1(self):
        with pytest.raises(AnalysisFailedError) as excinfo, translated_errors():
            raise BudgetTooSmall("no path within 0.5", data={"budget": 0.5})
        assert excinfo.value.exit_code == EXIT_ANALYSIS


def _failing_cli():
    @click.command()
    @global_options
    def command(output, config_path, verbose, log_format):
        set_output_mode(OutputMode(output) if output else OutputMode.TEXT)
        raise AnalysisFailedError("link condition fails", hint=["inspect the links"])

    return command


def test_a_json_failure_goes_to_stdout():
    result = CliRunner().invoke(_failing_cli(), ["--output", "json"])

    assert result.exit_code == EXIT_ANALYSIS
    payload = json.loads(result.stdout)
    assert payload["error"]["code"] == "analysis_failed"
    assert result.stderr == ""


def test_a_text_failure_goes_to_stderr():
    result = CliRunner().invoke(_failing_cli(), ["--output", "text"])

    assert result.exit_code == EXIT_ANALYSIS
    assert "link condition fails" in result.stderr
    assert result.stdout == ""
