"""Resource limits and worker configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass

WORKERS_ENV = "MHPOLY_WORKERS"


@dataclass(frozen=True)
class Limits:
    # |B_8| = 2^8 * 8! ~ 1.03e7 elements
    oracle_cap: int = 8
    # brute-force class/centralizer columns in the classes table
    brute_cap: int = 5


DEFAULT_LIMITS = Limits()


def worker_count(default: int = 1) -> int:
    """Number of worker processes for Weyl sums, read from ``MHPOLY_WORKERS``.

    ``0`` or ``max`` means one per CPU.
    """
    raw = os.environ.get(WORKERS_ENV, "").strip().lower()
    if not raw:
        return default
    if raw in ("0", "max"):
        return os.cpu_count() or 1
    n = int(raw)
    if n < 0:
        raise ValueError(f"{WORKERS_ENV} must be nonnegative, got {raw}")
    return n
