"""Size caps for the exhaustive enumerations.

Defaults can be overridden per process with environment variables
(``NFREE_MAX_GROUND`` and friends) or per block of code with
:func:`limits`::

    with limits(max_ground=64):
        free_product(a, b)
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Limits:
    max_ground: int = 24
    max_generators: int = 16
    max_vertices: int = 16
    # ground size up to which the i_n spectrum is enumerated exhaustively
    max_exhaustive_ground: int = 5
    max_family: int = 24


def _from_env() -> Limits:
    overrides = {}
    for f in fields(Limits):
        raw = os.environ.get("NFREE_" + f.name.upper())
        if raw is not None:
            overrides[f.name] = int(raw)
    return Limits(**overrides)


_current: ContextVar[Limits | None] = ContextVar("nfree_limits", default=None)


def get_limits() -> Limits:
    value = _current.get()
    if value is None:
        value = _from_env()
        _current.set(value)
    return value


@contextmanager
def limits(**overrides):
    token = _current.set(replace(get_limits(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
