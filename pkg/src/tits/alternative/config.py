"""Analysis settings, layered from defaults, YAML, ``.env`` and the environment."""

from __future__ import annotations

import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from tits.alternative.exceptions import ConfigurationError

ENV_PREFIX = "TITS_ALT_"


class AnalysisSettings(BaseModel):
    """Numeric knobs shared by every command (loaded from ``--config`` YAML)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    tolerance: float = Field(default=1e-9, description="Relative tolerance for lengths and numeric angles.")
    vertex_tolerance: float = Field(default=1e-9, description="Distance below which a trace counts as hitting a vertex.")
    budget: float = Field(default=8.0, description="Length budget for traces and searches.")
    offsets: int = Field(default=16, description="Grid offsets per edge for the connection search.")
    word_length: int = Field(default=4, description="Longest word checked by the free-subgroup certificate.")
    max_branch_depth: int = Field(default=4, description="Branching edges a traced path may cross straight.")
    threads: int = Field(default=1, description="Worker threads for parallel checks.")
    float_digits: int = Field(default=12, description="Significant digits for floats in JSON output.")

    @field_validator("tolerance", "vertex_tolerance")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Tolerances are small and positive."""
        if not 0 < v < 1e-2:
            raise ValueError(f"tolerance must lie in (0, 0.01), got {v}")
        return v

    @field_validator("budget")
    @classmethod
    def validate_budget(cls, v: float) -> float:
        """Budgets are positive."""
        if not v > 0:
            raise ValueError(f"budget must be positive, got {v}")
        return v

    @field_validator("offsets", "word_length", "threads")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Counts are at least 1."""
        if v < 1:
            raise ValueError(f"must be at least 1, got {v}")
        return v

    @field_validator("max_branch_depth")
    @classmethod
    def validate_depth(cls, v: int) -> int:
        """Depth may be zero (never continue through a branching edge)."""
        if v < 0:
            raise ValueError(f"max_branch_depth must be non-negative, got {v}")
        return v

    @field_validator("float_digits")
    @classmethod
    def validate_digits(cls, v: int) -> int:
        """Between 3 and 17 significant digits."""
        if not 3 <= v <= 17:
            raise ValueError(f"float_digits must lie in [3, 17], got {v}")
        return v

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> AnalysisSettings:
        """Validate a mapping, raising ConfigurationError on bad values."""
        try:
            return cls.model_validate(dict(data))
        except ValidationError as exc:
            raise ConfigurationError(
                f"Invalid analysis settings: {exc.errors()[0]['msg']}",
                fix_suggestion="Check the --config file and TITS_ALT_* variables.",
                data={"errors": [{"field": ".".join(map(str, e["loc"])), "message": e["msg"]} for e in exc.errors()]},
            ) from exc

    @classmethod
    def from_yaml(cls, path: Path) -> AnalysisSettings:
        """Load and validate settings from a YAML file."""
        return cls.from_mapping(_read_yaml(path))

    def merged(self, overrides: Mapping[str, Any]) -> AnalysisSettings:
        """A copy with every non-None override applied and revalidated."""
        data = self.model_dump()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return AnalysisSettings.from_mapping(data)


def _read_yaml(path: Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as exc:
        raise ConfigurationError(f"Cannot read settings file {path}: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"Settings file {path} is not valid YAML: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"Settings file {path} must hold a mapping, got {type(data).__name__}")
    return data


def _prefixed(values: Mapping[str, Optional[str]]) -> dict[str, str]:
    fields = AnalysisSettings.model_fields
    found = {}
    for key, value in values.items():
        if not key.startswith(ENV_PREFIX) or value is None:
            continue
        name = key[len(ENV_PREFIX) :].lower()
        if name in fields:
            found[name] = value
    return found


def load_settings(
    config_path: Optional[Path] = None,
    env_file: Optional[Path] = None,
    environ: Optional[Mapping[str, str]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> AnalysisSettings:
    """Resolve settings: defaults < YAML < ``.env`` < environment < overrides.

    ``env_file`` defaults to ``.env`` in the working directory when present.

    Raises:
        ConfigurationError: A source cannot be read or a value is invalid.
    """
    data: dict[str, Any] = {}
    if config_path is not None:
        data.update(_read_yaml(config_path))
    dotenv_path = env_file if env_file is not None else Path(".env")
    if dotenv_path.is_file():
        data.update(_prefixed(dotenv_values(dotenv_path)))
    data.update(_prefixed(environ if environ is not None else os.environ))
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return AnalysisSettings.from_mapping(data)
