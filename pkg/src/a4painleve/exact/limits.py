"""Resource caps shared by the arithmetic and search layers.

Defaults can be overridden with the environment variables A4_DEGREE_CAP,
A4_WORD_CAP and A4_DEPTH_CAP, or at runtime through `configure`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager


class DegreeCapExceeded(ArithmeticError):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {raw!r}")
    return value


DEGREE_CAP = _env_int("A4_DEGREE_CAP", 512)
WORD_CAP = _env_int("A4_WORD_CAP", 64)
DEPTH_CAP = _env_int("A4_DEPTH_CAP", 24)


def check_degree(deg: int) -> None:
    if deg > DEGREE_CAP:
        raise DegreeCapExceeded(f"degree {deg} exceeds cap {DEGREE_CAP}")


def configure(degree_cap: int | None = None, word_cap: int | None = None,
              depth_cap: int | None = None) -> None:
    global DEGREE_CAP, WORD_CAP, DEPTH_CAP
    if degree_cap is not None:
        DEGREE_CAP = degree_cap
    if word_cap is not None:
        WORD_CAP = word_cap
    if depth_cap is not None:
        DEPTH_CAP = depth_cap


@contextmanager
def caps(**kwargs):
    """Temporarily override caps, e.g. ``with caps(degree_cap=8): ...``."""
    saved = (DEGREE_CAP, WORD_CAP, DEPTH_CAP)
    configure(**kwargs)
    try:
        yield
    finally:
        configure(*saved)
