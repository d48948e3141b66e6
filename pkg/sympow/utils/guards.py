# sympow/utils/guards.py
"""
Resource guards.

The active limits live in a ContextVar so that nested library calls see the
limits installed by their caller, including work started with
``asyncio.to_thread`` (which copies the current context).

Example:
    >>> from sympow.utils.guards import Guards, guarded
    >>> with guarded(Guards(degree=20)):
    ...     ...
"""

import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import GuardAbort


class Guards(BaseModel):
    """Limits applied to every Groebner-basis based computation."""

    model_config = ConfigDict(frozen=True)

    degree: int = Field(default=80, gt=0, description="Largest total degree any intermediate polynomial may reach")
    seconds: float = Field(default=60.0, gt=0, description="Soft wall-clock budget per Groebner basis call")
    saturation_iterations: int = Field(default=64, gt=0, description="Colon iterations before saturation gives up")
    cover_variables: int = Field(default=12, gt=0, description="Largest variable count for exhaustive cover search")


_ACTIVE: ContextVar[Guards] = ContextVar("sympow_guards", default=Guards())


def current_guards() -> Guards:
    return _ACTIVE.get()


@contextmanager
def guarded(guards: Optional[Guards] = None, **overrides) -> Iterator[Guards]:
    """
    Install guards for the duration of the block.

    Args:
        guards: Full guard set; defaults to the currently active one
        **overrides: Individual fields to replace (e.g. degree=5)
    """
    base = guards or _ACTIVE.get()
    if overrides:
        base = base.model_copy(update=overrides)
    token = _ACTIVE.set(base)
    try:
        yield base
    finally:
        _ACTIVE.reset(token)


class Deadline:
    """Soft time budget for one computation."""

    __slots__ = ("context", "limit", "started")

    def __init__(self, context: str, limit: Optional[float] = None):
        self.context = context
        self.limit = limit if limit is not None else current_guards().seconds
        self.started = time.monotonic()

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def check(self) -> None:
        elapsed = self.elapsed
        if elapsed > self.limit:
            raise GuardAbort("time", f"{self.limit:g}s", f"{elapsed:.1f}s", self.context)


def check_degree(degree: int, context: str) -> None:
    limit = current_guards().degree
    if degree > limit:
        raise GuardAbort("degree", limit, degree, context)


__all__ = ["Guards", "guarded", "current_guards", "Deadline", "check_degree"]
