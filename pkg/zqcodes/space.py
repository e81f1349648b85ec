"""
Mixed-radix indexing of the ambient space Z_q^n.

Coordinate 0 is the most significant base-q digit, so index order equals
lexicographic word order and ``np.reshape(·, (q,) * n)`` lines axis j up
with coordinate j.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .domain import ResourceError

# Rough ceiling on elements materialised per vectorised chunk.
CHUNK_ELEMENTS = 1 << 22


def ambient_size(q: int, n: int) -> int:
    return q**n


def check_budget(what: str, states: int, limit: int) -> None:
    if states > limit:
        raise ResourceError(what, states, limit)


def place_values(q: int, n: int) -> np.ndarray:
    """Weights q^(n-1), …, q, 1 of each coordinate."""
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


def decode(indices: np.ndarray, q: int, n: int) -> np.ndarray:
    """Map flat indices to an ``(len(indices), n)`` array of digits."""
    indices = np.asarray(indices, dtype=np.int64)
    return (indices[:, None] // place_values(q, n)[None, :]) % q


def encode(words: np.ndarray, q: int) -> np.ndarray:
    """Inverse of :func:`decode` for an ``(m, n)`` array of residues."""
    words = np.asarray(words, dtype=np.int64)
    return words @ place_values(q, words.shape[1])


def chunk_ranges(total: int, width: int) -> Iterator[tuple[int, int]]:
    """Split ``range(total)`` into consecutive ``[start, stop)`` pieces."""
    step = max(1, CHUNK_ELEMENTS // max(1, width))
    for start in range(0, total, step):
        yield start, min(total, start + step)


def min_distances(points: np.ndarray, words: np.ndarray) -> np.ndarray:
    """Distance from each row of ``points`` to its nearest row of ``words``."""
    best = np.full(points.shape[0], points.shape[1], dtype=np.int64)
    # Bound the (points × block × n) comparison cube.
    block = max(1, CHUNK_ELEMENTS // max(1, points.shape[0] * points.shape[1]))
    for start in range(0, words.shape[0], block):
        part = words[start : start + block]
        diff = (points[:, None, :] != part[None, :, :]).sum(axis=2)
        np.minimum(best, diff.min(axis=1), out=best)
    return best
