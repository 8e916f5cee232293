"""File-format models for triangle complexes.

A complex document is JSON (or YAML) of the form::

    {
      "atoms": {"alpha": 0.9},
      "vertices": ["A", "B", "C"],
      "triangles": [
        {"v": ["A", "B", "C"], "angles": ["1/4", "1/2", "1/4"], "sides": [1.0, 1.4142135623730951, 1.0]}
      ]
    }

Side ``i`` is opposite corner ``i``. Angles use the literal format of
:func:`tits.alternative.algebra.parse_angle`.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from tits.alternative.exceptions import MalformedDocument


class TriangleDocument(BaseModel):
    """One triangle of a complex document."""

    model_config = ConfigDict(extra="forbid")

    v: list[str] = Field(description="Ordered vertex triple.", min_length=3, max_length=3)
    angles: list[Any] = Field(description="Exact corner angles, one per vertex.", min_length=3, max_length=3)
    sides: list[float] = Field(description="Side lengths, side i opposite corner i.", min_length=3, max_length=3)

    @field_validator("sides")
    @classmethod
    def validate_sides(cls, v: list[float]) -> list[float]:
        """Sides must be finite numbers; positivity is checked with the geometry."""
        if not all(math.isfinite(s) for s in v):
            raise ValueError("side lengths must be finite")
        return v


class ComplexDocument(BaseModel):
    """A whole complex document."""

    model_config = ConfigDict(extra="forbid")

    atoms: dict[str, float] = Field(default_factory=dict, description="Atom name -> value in radians.")
    vertices: list[str] = Field(description="Vertex ids.")
    triangles: list[TriangleDocument] = Field(description="Triangles.")

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, v: list[str]) -> list[str]:
        """Vertex ids must be unique and non-empty."""
        if any(not name for name in v):
            raise ValueError("vertex ids must be non-empty")
        if len(set(v)) != len(v):
            raise ValueError("vertex ids must be unique")
        return v

    @model_validator(mode="after")
    def validate_triangle_vertices(self) -> ComplexDocument:
        """Every triangle corner must be a declared vertex."""
        declared = set(self.vertices)
        for index, triangle in enumerate(self.triangles):
            missing = [name for name in triangle.v if name not in declared]
            if missing:
                raise ValueError(f"triangle {index} uses undeclared vertices {missing}")
        return self

    @classmethod
    def from_data(cls, data: Any) -> ComplexDocument:
        """Validate already-parsed data.

        Raises:
            MalformedDocument: The data does not match the format.
        """
        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            raise MalformedDocument(f"Invalid complex document: {exc.error_count()} error(s)\n{exc}") from exc

    @classmethod
    def from_file(cls, path: Path) -> ComplexDocument:
        """Load a document from a ``.json``, ``.yaml`` or ``.yml`` file.

        Raises:
            MalformedDocument: The file cannot be read or parsed.
        """
        try:
            text = path.read_text()
        except OSError as exc:
            raise MalformedDocument(f"Cannot read {path}: {exc.strerror}") from exc
        try:
            data = yaml.safe_load(text) if path.suffix in (".yaml", ".yml") else json.loads(text)
        except (json.JSONDecodeError, yaml.YAMLError) as exc:
            raise MalformedDocument(f"Cannot parse {path}: {exc}") from exc
        return cls.from_data(data)

    def to_json(self) -> str:
        """Canonical JSON text."""
        return json.dumps(self.model_dump(), indent=2, sort_keys=True) + "\n"
