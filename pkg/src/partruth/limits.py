"""Resource caps for basis computations.

Caps live in a context variable so that nested computations started from one
classifier run share a single deadline, while concurrent runs in other threads
or tasks keep their own.
"""

from __future__ import annotations

import contextlib
import contextvars
import time
from dataclasses import dataclass

from .errors import ResourceLimitExceeded


@dataclass(frozen=True)
class Limits:
    max_seconds: float | None = None
    max_basis_size: int | None = None
    deadline: float | None = None

    def check_time(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitExceeded(
                f"time limit of {self.max_seconds} s exceeded")

    def check_size(self, size: int) -> None:
        if self.max_basis_size is not None and size > self.max_basis_size:
            raise ResourceLimitExceeded(
                f"basis size cap of {self.max_basis_size} exceeded")


_NO_LIMITS = Limits()
_current: contextvars.ContextVar[Limits] = contextvars.ContextVar(
    "partruth_limits", default=_NO_LIMITS)


def current_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def resource_limits(max_seconds: float | None = None,
                    max_basis_size: int | None = None):
    """Run the enclosed block under the given caps.

    An enclosing, tighter deadline is never extended by a nested block.
    """
    outer = _current.get()
    deadline = outer.deadline
    if max_seconds is not None:
        if max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        mine = time.monotonic() + max_seconds
        deadline = mine if deadline is None else min(deadline, mine)
    size = max_basis_size if max_basis_size is not None else outer.max_basis_size
    token = _current.set(Limits(max_seconds if max_seconds is not None
                                else outer.max_seconds, size, deadline))
    try:
        yield
    finally:
        _current.reset(token)
