"""JSON log lines for stderr.

Analysis modules log exact angles, fractions, edge keys and numpy values in
``extra``; they are rendered the way reports render them, so a log line can
be read next to the JSON result it belongs to.
"""

import json
import logging
import traceback
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np

from tits.alternative.algebra import AngleExpr

#: Attributes every LogRecord carries; anything else came in through ``extra``.
RECORD_ATTRS = frozenset(logging.makeLogRecord({}).__dict__) | {"message", "asctime"}


def _loggable(value: Any) -> Any:
    if isinstance(value, (AngleExpr, Fraction)):
        return str(value)
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value, key=str)
    return str(value)


class StructuredFormatter(logging.Formatter):
    """One JSON object per record.

    The object holds ``timestamp`` (UTC, ISO 8601 with ``Z``), ``level``,
    ``logger`` and ``message``, then every ``extra`` field, then an
    ``exception`` block when the record carries one. The level and message
    keys can be renamed for log shippers that expect ``severity``/``text``.
    """

    def __init__(
        self,
        include_timestamp: bool = True,
        level_field: str = "level",
        message_field: str = "message",
        extra_fields: Optional[Dict[str, Any]] = None,
    ):
        """Configure the output keys.

        Args:
            include_timestamp: Emit the ``timestamp`` key.
            level_field: Key for the level name.
            message_field: Key for the rendered message.
            extra_fields: Constant fields added to every line.
        """
        super().__init__()
        self.include_timestamp = include_timestamp
        self.level_field = level_field
        self.message_field = message_field
        self.extra_fields = dict(extra_fields or {})

    def to_dict(self, record: logging.LogRecord) -> Dict[str, Any]:
        """The JSON object for ``record`` before serialization."""
        line: Dict[str, Any] = dict(self.extra_fields)
        if self.include_timestamp:
            line["timestamp"] = datetime.fromtimestamp(record.created, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")
        line[self.level_field] = record.levelname
        line["logger"] = record.name
        line[self.message_field] = record.getMessage()

        taken = set(line) | {"exception"}
        line.update(
            (key, value)
            for key, value in record.__dict__.items()
            if key not in RECORD_ATTRS and key not in taken and not key.startswith("_")
        )

        if record.exc_info and record.exc_info[0] is not None:
            kind, error, tb = record.exc_info
            line["exception"] = {
                "type": kind.__name__,
                "message": str(error) if error is not None else None,
                "traceback": "".join(traceback.format_exception(kind, error, tb)).strip(),
            }
        return line

    def format(self, record: logging.LogRecord) -> str:
        """Serialize ``record``; a value json cannot encode falls back to ``str``."""
        return json.dumps(self.to_dict(record), default=_loggable, ensure_ascii=False)
