"""
Z_q-linear codes: generator matrices, enumerated codeword sets and their
exact parameters.

Cardinality always comes from enumeration plus deduplication. Over a ring
the generator rows need not be independent (``[2]`` over Z_4 spans only
{0, 2}), so M is never inferred from k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

import numpy as np
from loguru import logger

from .arithmetic import ResidueVector, check_modulus
from .config import DEFAULT_DUAL_LIMIT, DEFAULT_ENUM_LIMIT, DEFAULT_PAIR_LIMIT
from .domain import CodeSummary, DimensionError, DomainError, UndefinedDistanceError
from .space import (
    ambient_size,
    check_budget,
    chunk_ranges,
    decode,
    encode,
)

# ---------------------------------------------------------------------------
# GeneratorMatrix
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorMatrix:
    """
    k rows of length n over Z_q.

    Attributes:
        q: Modulus shared by all rows.
        rows: The generator rows, k >= 1, each of length n >= 1.
    """

    q: int
    rows: tuple[ResidueVector, ...]

    def __post_init__(self) -> None:
        check_modulus(self.q)
        if not self.rows:
            raise DomainError("k", 0, "at least one generator row")
        n = self.rows[0].n
        for index, row in enumerate(self.rows):
            if row.q != self.q or row.n != n:
                raise DimensionError(
                    f"row {index} in Z_{row.q}^{row.n}", f"Z_{self.q}^{n}"
                )

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[Sequence[int]]) -> "GeneratorMatrix":
        """Build from plain integer rows, reducing entries mod q."""
        return cls(q, tuple(ResidueVector.of(q, row) for row in rows))

    @classmethod
    def from_array(cls, q: int, array: np.ndarray) -> "GeneratorMatrix":
        return cls.from_rows(q, np.asarray(array).tolist())

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return self.rows[0].n

    def as_array(self) -> np.ndarray:
        return np.array([row.entries for row in self.rows], dtype=np.int64)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in col) for col in self.as_array().T]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


# ---------------------------------------------------------------------------
# SymbolCounts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymbolCounts:
    """Occurrences r_0 … r_{q-1} of each symbol in one word."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.counts)

    def __getitem__(self, symbol: int) -> int:
        return self.counts[symbol]


def symbol_counts(c: ResidueVector) -> SymbolCounts:
    tally = Counter(c.entries)
    return SymbolCounts(tuple(tally.get(i, 0) for i in range(c.q)))


# ---------------------------------------------------------------------------
# LinearCode
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearCode:
    """
    A generator matrix together with its full, sorted codeword set.

    ``words`` is a read-only ``(M, n)`` integer array in lexicographic order;
    ``codewords`` exposes the same set as :class:`ResidueVector` values.
    """

    generator: GeneratorMatrix
    words: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        self.words.setflags(write=False)

    @property
    def q(self) -> int:
        return self.generator.q

    @property
    def n(self) -> int:
        return self.generator.n

    @property
    def k(self) -> int:
        return self.generator.k

    @property
    def cardinality(self) -> int:
        return int(self.words.shape[0])

    @cached_property
    def codewords(self) -> tuple[ResidueVector, ...]:
        return tuple(ResidueVector.of(self.q, w) for w in self.words.tolist())

    @cached_property
    def word_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(tuple(w) for w in self.words.tolist())

    @cached_property
    def weights(self) -> np.ndarray:
        return (self.words != 0).sum(axis=1)

    @cached_property
    def summary(self) -> CodeSummary:
        distribution = weight_distribution(self)
        nonzero = [w for w in distribution if w > 0]
        return CodeSummary(
            q=self.q,
            n=self.n,
            k=self.k,
            cardinality=self.cardinality,
            min_distance=min(nonzero) if nonzero else None,
            weight_distribution=tuple(sorted(distribution.items())),
        )

    def contains(self, word: ResidueVector | Sequence[int]) -> bool:
        return tuple(int(v) for v in word) in self.word_set

    def __len__(self) -> int:
        return self.cardinality

    def __str__(self) -> str:
        return f"Z_{self.q} code {self.summary}"


def _unique_words(words: np.ndarray) -> np.ndarray:
    # np.unique over rows sorts lexicographically.
    return np.unique(words, axis=0)


def enumerate_codewords(
    generator: GeneratorMatrix, limit: int = DEFAULT_ENUM_LIMIT
) -> LinearCode:
    """
    Enumerate every Z_q-combination of the generator rows.

    Raises:
        ResourceError: If q^k coefficient tuples exceed ``limit``.
    """
    q, k, n = generator.q, generator.k, generator.n
    total = ambient_size(q, k)
    check_budget(f"enumerating Z_{q}^{k} coefficient tuples", total, limit)

    matrix = generator.as_array()
    parts: list[np.ndarray] = []
    for start, stop in chunk_ranges(total, k + n):
        coefficients = decode(np.arange(start, stop, dtype=np.int64), q, k)
        parts.append(_unique_words((coefficients @ matrix) % q))
    words = _unique_words(np.concatenate(parts))

    code = LinearCode(generator, words)
    logger.debug(
        "Enumerated Z_{} code: k={} n={} M={}", q, k, n, code.cardinality
    )
    return code


def code_from_words(q: int, words: np.ndarray) -> LinearCode:
    """
    Wrap an already-closed word set as a :class:`LinearCode`.

    A generating set is picked greedily from the words; the zero code gets
    the single zero row.
    """
    words = _unique_words(np.asarray(words, dtype=np.int64) % q)
    n = words.shape[1]
    span = {tuple([0] * n)}
    gens: list[tuple[int, ...]] = []
    for word in map(tuple, words.tolist()):
        if word in span:
            continue
        gens.append(word)
        span = {
            tuple((s + a * w) % q for s, w in zip(base, word))
            for base in span
            for a in range(q)
        }
    if not gens:
        gens = [tuple([0] * n)]
    return LinearCode(GeneratorMatrix.from_rows(q, gens), words)


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------


def weight_distribution(code: LinearCode) -> dict[int, int]:
    values, counts = np.unique(code.weights, return_counts=True)
    return {int(w): int(c) for w, c in zip(values, counts)}


def min_distance(code: LinearCode) -> int:
    """
    Minimum nonzero weight, which equals the minimum pairwise distance for a
    linear code.

    Raises:
        UndefinedDistanceError: If the code is {0}.
    """
    d = code.summary.min_distance
    if d is None:
        raise UndefinedDistanceError(code.n)
    return d


def pairwise_min_distance(code: LinearCode, limit: int = DEFAULT_PAIR_LIMIT) -> int:
    """
    Minimum over distinct pairs of codewords, computed directly.

    Raises:
        UndefinedDistanceError: If the code has a single word.
        ResourceError: If M^2 exceeds ``limit``.
    """
    m = code.cardinality
    if m < 2:
        raise UndefinedDistanceError(code.n)
    check_budget("pairwise distance scan", m * m, limit)
    words = code.words
    best = code.n
    for start, stop in chunk_ranges(m, m * code.n):
        block = words[start:stop]
        dist = (block[:, None, :] != words[None, :, :]).sum(axis=2)
        rows = np.arange(stop - start)
        dist[rows, rows + start] = code.n + 1  # mask the diagonal
        best = min(best, int(dist.min()))
    return best


def dual_code(code: LinearCode, limit: int = DEFAULT_DUAL_LIMIT) -> LinearCode:
    """
    All x in Z_q^n with x · g ≡ 0 (mod q) for every generator row g.

    Raises:
        ResourceError: If the ambient scan of q^n vectors exceeds ``limit``.
    """
    q, n = code.q, code.n
    total = ambient_size(q, n)
    check_budget(f"dual scan of Z_{q}^{n}", total, limit)

    transposed = code.generator.as_array().T
    parts: list[np.ndarray] = []
    for start, stop in chunk_ranges(total, n + code.k):
        points = decode(np.arange(start, stop, dtype=np.int64), q, n)
        mask = ((points @ transposed) % q == 0).all(axis=1)
        parts.append(points[mask])
    dual = code_from_words(q, np.concatenate(parts))
    logger.debug("Dual of Z_{} code (n={}): M={}", q, n, dual.cardinality)
    return dual


def sphere_volume(q: int, n: int, t: int) -> int:
    """Number of words within Hamming distance t of a fixed word."""
    return sum(comb(n, j) * (q - 1) ** j for j in range(t + 1))


def packing_radius(code: LinearCode) -> int:
    d = code.summary.min_distance
    return 0 if d is None else (d - 1) // 2


def is_perfect(code: LinearCode) -> bool:
    """Sphere-packing equality M · V(n, t) = q^n with t = ⌊(d−1)/2⌋."""
    q, n = code.q, code.n
    if code.summary.min_distance is None:
        return code.cardinality == ambient_size(q, n)
    t = packing_radius(code)
    return code.cardinality * sphere_volume(q, n, t) == ambient_size(q, n)


def is_submodule(code: LinearCode) -> bool:
    """Closure under addition and every scalar multiple (exhaustive)."""
    q = code.q
    members = code.word_set
    words = code.words
    for a in range(q):
        scaled = (a * words) % q
        if any(tuple(w) not in members for w in scaled.tolist()):
            return False
    for row in words:
        sums = (words + row[None, :]) % q
        if any(tuple(w) not in members for w in sums.tolist()):
            return False
    return True


def encode_words(code: LinearCode) -> np.ndarray:
    """Flat ambient indices of the codewords."""
    return encode(code.words, code.q)
