"""Correlation Context Module

Tracks the run id of the current CLI invocation or library call.
"""

import contextvars
import uuid
from contextlib import contextmanager
from typing import Iterator, Optional

_run_id: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar(
    "reductlab_run_id", default=None
)


class CorrelationContext:
    """Manages run ids so log lines of one run can be grouped"""

    @staticmethod
    def set_current(run_id: Optional[str] = None) -> str:
        """Set the run id for the current context, generating one if needed"""
        if run_id is None:
            run_id = uuid.uuid4().hex[:12]
        _run_id.set(run_id)
        return run_id

    @staticmethod
    def get_current() -> Optional[str]:
        """Get the current run id"""
        return _run_id.get()

    @staticmethod
    def clear() -> None:
        """Clear the current run id"""
        _run_id.set(None)

    @staticmethod
    @contextmanager
    def scope(run_id: Optional[str] = None) -> Iterator[str]:
        """Bind a run id for the duration of a block"""
        token = _run_id.set(run_id or uuid.uuid4().hex[:12])
        try:
            yield _run_id.get() or ""
        finally:
            _run_id.reset(token)
