"""Deterministic random streams.

Every stream is a Philox-4x64 counter-based generator keyed by a numpy
``SeedSequence`` built from ``(seed, trial, crc32(purpose))``. Streams for
different trials or purposes are independent of the order in which they are
created, so parallel trials reproduce exactly.
"""

from __future__ import annotations

import operator
import zlib

import numpy as np

SEED_LIMIT = 1 << 64


def check_seed(seed: int) -> int:
    seed = operator.index(seed)  # rejects floats rather than truncating
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def stream(seed: int, trial: int = 0, purpose: str = "") -> np.random.Generator:
    ss = np.random.SeedSequence(
        entropy=check_seed(seed),
        spawn_key=(int(trial), zlib.crc32(purpose.encode("utf-8"))),
    )
    return np.random.Generator(np.random.Philox(ss))
