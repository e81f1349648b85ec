"""
Covering radius engines.

  - ``covering_radius_exhaustive``: max over every ambient word of its
    distance to the nearest codeword.
  - ``covering_radius_bfs``: multi-source ball growth from all codewords at
    once over a packed one-bit-per-state visited set.
  - ``sampled_lower_bound``: the same max over seeded random words only.

The two exact engines share nothing but the index encoding, so they check
each other.
"""

from __future__ import annotations

import numpy as np
from loguru import logger

from .code import LinearCode, encode_words
from .config import DEFAULT_BFS_LIMIT, DEFAULT_EXHAUSTIVE_LIMIT, DEFAULT_SEED
from .domain import DomainError, RadiusMethod, RadiusResult
from .space import (
    ambient_size,
    check_budget,
    chunk_ranges,
    decode,
    min_distances,
)


def covering_radius_exhaustive(
    code: LinearCode, limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> RadiusResult:
    """
    R(C) = max_u min_c d(u, c) over all u in Z_q^n.

    Raises:
        ResourceError: If q^n exceeds ``limit``.
    """
    q, n = code.q, code.n
    total = ambient_size(q, n)
    check_budget(f"exhaustive scan of Z_{q}^{n}", total, limit)

    words = code.words
    radius = scanned = 0
    for start, stop in chunk_ranges(total, code.cardinality * n):
        points = decode(np.arange(start, stop, dtype=np.int64), q, n)
        radius = max(radius, int(min_distances(points, words).max()))
        scanned = stop
        if radius == n:
            break
    logger.debug("Exhaustive radius over Z_{}^{}: {}", q, n, radius)
    return RadiusResult(
        value=radius, method=RadiusMethod.EXHAUSTIVE, states_visited=scanned, n=n
    )


# ---------------------------------------------------------------------------
# Breadth-first ball growth
# ---------------------------------------------------------------------------


class PackedVisited:
    """
    One bit per ambient state, split into q slabs by the leading coordinate.

    Slab s holds the states whose coordinate 0 equals s, in index order, so
    every state's bit lives at ``(index // slab_size, index % slab_size)``.
    """

    def __init__(self, q: int, n: int) -> None:
        self.q = q
        self.n = n
        self.slab_size = q ** (n - 1)
        self.slab_shape = (q,) * (n - 1)
        self._bits = np.zeros((q, (self.slab_size + 7) // 8), dtype=np.uint8)

    def mark(self, indices: np.ndarray) -> None:
        slabs, offsets = np.divmod(np.asarray(indices, dtype=np.int64), self.slab_size)
        for s in np.unique(slabs):
            slab = self.unpack(int(s))
            slab[offsets[slabs == s]] = True
            self.store(int(s), slab)

    def unpack(self, s: int) -> np.ndarray:
        return np.unpackbits(self._bits[s], count=self.slab_size).astype(bool)

    def store(self, s: int, slab: np.ndarray) -> None:
        self._bits[s] = np.packbits(slab)

    def count(self) -> int:
        return int(
            sum(
                np.unpackbits(self._bits[s], count=self.slab_size).sum()
                for s in range(self.q)
            )
        )

    @property
    def nbytes(self) -> int:
        return int(self._bits.nbytes)


def _grow_slab(slab: np.ndarray, shape: tuple[int, ...], reached_any: np.ndarray):
    """
    One BFS level inside a slab: a state is reached if it was reached before,
    if its line along coordinate 0 held a reached state (``reached_any``), or
    if its line along any other coordinate did.
    """
    old = slab.reshape(shape)
    grown = old | reached_any.reshape(shape)
    for axis in range(len(shape)):
        grown |= old.any(axis=axis, keepdims=True)
    return grown.reshape(-1)


def covering_radius_bfs(
    code: LinearCode, limit: int = DEFAULT_BFS_LIMIT
) -> RadiusResult:
    """
    Seed every codeword at depth 0 and grow Hamming balls level by level
    (changing one coordinate to any other residue) until Z_q^n is covered.
    The number of levels is the covering radius.

    Each level is computed slab by slab from the previous level only, so the
    result does not depend on the order slabs are processed in.

    Raises:
        ResourceError: If q^n exceeds ``limit``.
    """
    q, n = code.q, code.n
    total = ambient_size(q, n)
    check_budget(f"BFS over Z_{q}^{n}", total, limit)

    visited = PackedVisited(q, n)
    visited.mark(encode_words(code))
    reached = code.cardinality
    logger.debug(
        "BFS over Z_{}^{}: {} seeds, visited set {} bytes",
        q,
        n,
        reached,
        visited.nbytes,
    )

    depth = 0
    while reached < total:
        # Lines along coordinate 0 cross every slab: OR the slabs first.
        reached_any = np.zeros(visited.slab_size, dtype=bool)
        for s in range(q):
            reached_any |= visited.unpack(s)
        now = 0
        for s in range(q):
            # Slab s only reads its own previous level, so it can be
            # overwritten in place.
            grown = _grow_slab(visited.unpack(s), visited.slab_shape, reached_any)
            visited.store(s, grown)
            now += int(grown.sum())
        depth += 1
        logger.debug("BFS level {}: {} → {} states", depth, reached, now)
        if now == reached:
            raise RuntimeError("BFS stalled before covering the space")
        reached = now

    return RadiusResult(
        value=depth, method=RadiusMethod.BFS, states_visited=reached, n=n
    )


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------


def sampled_lower_bound(
    code: LinearCode, samples: int, seed: int = DEFAULT_SEED
) -> RadiusResult:
    """
    Max distance-to-code over ``samples`` words drawn uniformly from Z_q^n.

    Draws come from ``numpy.random.default_rng(seed)`` (PCG64), so the value
    is reproducible for a given (seed, samples) and never exceeds R(C).
    """
    if samples < 1:
        raise DomainError("samples", samples, "samples >= 1")
    q, n = code.q, code.n
    rng = np.random.default_rng(seed)
    best = 0
    for start, stop in chunk_ranges(samples, code.cardinality * n):
        points = rng.integers(0, q, size=(stop - start, n), dtype=np.int64)
        best = max(best, int(min_distances(points, code.words).max()))
    logger.debug("Sampled lower bound over {} words: {}", samples, best)
    return RadiusResult(
        value=best, method=RadiusMethod.SAMPLED, states_visited=samples, n=n
    )


def covering_radius(
    code: LinearCode, method: RadiusMethod | str, **options
) -> RadiusResult:
    """Dispatch on ``method`` (exhaustive | bfs | sampled-lower-bound)."""
    method = RadiusMethod(method)
    if method is RadiusMethod.EXHAUSTIVE:
        return covering_radius_exhaustive(code, **options)
    if method is RadiusMethod.BFS:
        return covering_radius_bfs(code, **options)
    return sampled_lower_bound(code, **options)
