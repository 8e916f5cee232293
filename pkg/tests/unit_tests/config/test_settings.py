"""Tests for layered analysis settings."""

import pytest

from tits.alternative.config import AnalysisSettings, load_settings
from tits.alternative.exceptions import ConfigurationError


@pytest.fixture
def no_dotenv(tmp_path):
    return tmp_path / "missing.env"


def test_defaults(no_dotenv):
    settings = load_settings(env_file=no_dotenv, environ={})
    assert settings == AnalysisSettings()
    assert settings.budget == 8.0
    assert settings.word_length == 4


def test_sources_are_layered(tmp_path):
    config = tmp_path / "settings.yaml"
    config.write_text("budget: 2.0\noffsets: 8\n", encoding="utf-8")
    dotenv = tmp_path / ".env"
    dotenv.write_text("TITS_ALT_BUDGET=3.0\nTITS_ALT_THREADS=2\n", encoding="utf-8")
    settings = load_settings(
        config_path=config,
        env_file=dotenv,
        environ={"TITS_ALT_BUDGET": "4.0", "HOME": "/root"},
        overrides={"threads": 3, "word_length": None},
    )
    assert settings.budget == 4.0
    assert settings.offsets == 8
    assert settings.threads == 3
    assert settings.word_length == 4


def test_unrelated_variables_are_ignored(no_dotenv):
    settings = load_settings(env_file=no_dotenv, environ={"TITS_ALT_COLOUR": "red", "BUDGET": "1"})
    assert settings.budget == 8.0


def test_empty_yaml_means_defaults(tmp_path, no_dotenv):
    config = tmp_path / "empty.yaml"
    config.write_text("", encoding="utf-8")
    assert load_settings(config_path=config, env_file=no_dotenv, environ={}) == AnalysisSettings()


@pytest.mark.parametrize(
    "values",
    [{"tolerance": 0.5}, {"budget": 0}, {"offsets": 0}, {"max_branch_depth": -1}, {"float_digits": 30}, {"colour": "red"}],
)
def test_invalid_values(values):
    with pytest.raises(ConfigurationError) as excinfo:
        AnalysisSettings.from_mapping(values)
    assert excinfo.value.data["errors"]


def test_invalid_environment_value(no_dotenv):
    with pytest.raises(ConfigurationError) as excinfo:
        load_settings(env_file=no_dotenv, environ={"TITS_ALT_THREADS": "many"})
    assert excinfo.value.data["errors"][0]["field"] == "threads"


def test_unreadable_sources(tmp_path, no_dotenv):
    with pytest.raises(ConfigurationError):
        load_settings(config_path=tmp_path / "missing.yaml", env_file=no_dotenv, environ={})
    listed = tmp_path / "list.yaml"
    listed.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        AnalysisSettings.from_yaml(listed)
    broken = tmp_path / "broken.yaml"
    broken.write_text("budget: [1\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        AnalysisSettings.from_yaml(broken)


def test_merged_skips_missing_overrides():
    settings = AnalysisSettings().merged({"budget": 3.0, "threads": None})
    assert settings.budget == 3.0
    assert settings.threads == 1
    with pytest.raises(ConfigurationError):
        settings.merged({"threads": 0})
