"""Seeded substreams, scale guards, and small integer helpers."""

from __future__ import annotations

import hashlib
import os
import random

from .errors import ScaleGuardError

DEFAULT_GRID_LIMIT = 10**6


def grid_limit() -> int:
    """Point-grid cap for exhaustive ops; FFINC_MAX_GRID overrides the default 10^6."""
    return int(os.environ.get("FFINC_MAX_GRID", str(DEFAULT_GRID_LIMIT)))


def check_grid(size: int, what: str) -> None:
    limit = grid_limit()
    if size > limit:
        raise ScaleGuardError(what, size, limit)


def subseed(master: int, *labels) -> int:
    """Derive a 64-bit seed from a master seed and fixed labels (stable across runs)."""
    text = repr((int(master),) + tuple(str(x) for x in labels))
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def substream(master: int, *labels) -> random.Random:
    return random.Random(subseed(master, *labels))


def ceil_root(n: int, e: int) -> int:
    """Smallest integer r with r**e >= n (n >= 1, e >= 1)."""
    if n <= 1:
        return 1
    r = max(1, round(n ** (1.0 / e)))
    while r**e >= n and (r - 1) ** e >= n:
        r -= 1
    while r**e < n:
        r += 1
    return r


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
