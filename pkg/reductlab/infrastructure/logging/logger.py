"""Logger Module

Structured logging with run correlation. Library code logs through
``get_logger``; only the CLI calls ``configure_logging``.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, MutableMapping, Tuple

from .correlation import CorrelationContext

# Attributes every LogRecord carries; anything else came in through ``extra``.
_RECORD_FIELDS = frozenset(
    {
        "name",
        "msg",
        "args",
        "created",
        "filename",
        "funcName",
        "levelname",
        "levelno",
        "lineno",
        "module",
        "msecs",
        "pathname",
        "process",
        "processName",
        "relativeCreated",
        "thread",
        "threadName",
        "exc_info",
        "exc_text",
        "stack_info",
        "message",
        "taskName",
    }
)


class StructuredLogger(logging.LoggerAdapter):
    """Logger adapter that attaches run id and timestamp to every record"""

    def process(
        self, msg: Any, kwargs: MutableMapping[str, Any]
    ) -> Tuple[Any, MutableMapping[str, Any]]:
        extra = dict(kwargs.get("extra") or {})

        run_id = CorrelationContext.get_current()
        if run_id:
            extra["run_id"] = run_id

        extra["timestamp"] = datetime.now(timezone.utc).isoformat()

        # Dict messages become structured fields
        if isinstance(msg, dict):
            extra.update(msg)
            msg = extra.pop("message", "")

        kwargs["extra"] = extra
        return msg, kwargs


def get_logger(name: str) -> StructuredLogger:
    """Get a structured logger instance"""
    return StructuredLogger(logging.getLogger(name), {})


def configure_logging(level: str = "WARNING", format_json: bool = True) -> None:
    """Configure root logging on the error stream.

    Args:
        level: Logging level name.
        format_json: Emit one JSON object per line instead of plain text.
    """
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        force=True,
    )

    if format_json:
        for handler in logging.root.handlers:
            handler.setFormatter(JsonFormatter())


class JsonFormatter(logging.Formatter):
    """Format log records as single-line JSON"""

    def format(self, record: logging.LogRecord) -> str:
        log_obj = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        for key, value in record.__dict__.items():
            if key not in _RECORD_FIELDS:
                log_obj[key] = value

        return json.dumps(log_obj, default=str)
