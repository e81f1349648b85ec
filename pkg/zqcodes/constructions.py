"""
Generator matrices of the code families: Simplex G_k, MacDonald G_{k,u},
unit / zero-divisor repetition, the full repetition matrix and the
D-extension of an arbitrary code.

Column order follows the block displays exactly, so constructed matrices
are byte-reproducible. Odd q is accepted here; only statements that use
q/2 refuse it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np
from loguru import logger

from .arithmetic import check_modulus
from .code import GeneratorMatrix, LinearCode
from .config import DEFAULT_COLUMN_LIMIT
from .domain import DegenerateGeneratorError, DimensionError, DomainError
from .space import check_budget


def simplex_length(q: int, k: int) -> int:
    """n_k = (q^k − 1)/(q − 1)."""
    check_modulus(q)
    return (q**k - 1) // (q - 1)


def macdonald_length(q: int, k: int, u: int) -> int:
    return simplex_length(q, k) - simplex_length(q, u)


@dataclass(frozen=True)
class SimplexSpec:
    q: int
    k: int

    def __post_init__(self) -> None:
        check_modulus(self.q)
        if self.k < 2:
            raise DomainError("k", self.k, "k >= 2")
        if self.q % 2:
            logger.warning(
                "Simplex over odd q={}: the distance formula only covers even q",
                self.q,
            )

    @property
    def n(self) -> int:
        return simplex_length(self.q, self.k)


@dataclass(frozen=True)
class MacDonaldSpec:
    q: int
    k: int
    u: int

    def __post_init__(self) -> None:
        check_modulus(self.q)
        if self.k < 3:
            raise DomainError("k", self.k, "k >= 3 for a MacDonald code")
        if not 2 <= self.u <= self.k - 1:
            raise DomainError("u", self.u, f"2 <= u <= {self.k - 1}")
        if self.q % 2:
            logger.warning("MacDonald code over odd q={}", self.q)

    @property
    def n(self) -> int:
        return macdonald_length(self.q, self.k, self.u)


# ---------------------------------------------------------------------------
# Simplex and MacDonald
# ---------------------------------------------------------------------------


def _simplex_array(q: int, k: int) -> np.ndarray:
    top = np.array([0, 1, *range(1, q)], dtype=np.int64)
    bottom = np.array([1, 0, *([1] * (q - 1))], dtype=np.int64)
    g = np.vstack([top, bottom])
    for _ in range(2, k):
        rows, width = g.shape
        lone = np.zeros((rows + 1, 1), dtype=np.int64)
        lone[0, 0] = 1
        blocks = [np.vstack([np.zeros((1, width), dtype=np.int64), g]), lone]
        for i in range(1, q):
            blocks.append(np.vstack([np.full((1, width), i, dtype=np.int64), g]))
        g = np.hstack(blocks)
    return g


def simplex_generator(
    q: int, k: int, column_limit: int = DEFAULT_COLUMN_LIMIT
) -> GeneratorMatrix:
    """
    G_2 has columns (0,1), (1,0), (1,1), (2,1), …, (q−1,1); G_{k+1} is
    [0 over G_k | e_1 | 1 over G_k | 2 over G_k | … | q−1 over G_k].

    Raises:
        DomainError: If k < 2 or q < 2.
        ResourceError: If n_k exceeds ``column_limit``.
    """
    spec = SimplexSpec(q, k)
    check_budget(f"Simplex S_{k}({q}) columns", spec.n, column_limit)
    g = _simplex_array(q, k)
    logger.info("Built Simplex generator S_{}({}): {}x{}", k, q, *g.shape)
    return GeneratorMatrix.from_array(q, g)


def macdonald_deleted_columns(simplex: GeneratorMatrix, u: int) -> list[int]:
    """Indices of the columns of G_k whose top k−u entries are all zero."""
    top = simplex.as_array()[: simplex.k - u]
    return [j for j in range(simplex.n) if not top[:, j].any()]


def macdonald_generator(
    q: int, k: int, u: int, column_limit: int = DEFAULT_COLUMN_LIMIT
) -> GeneratorMatrix:
    """
    G_{k,u}: G_k with the embedded [0; G_u] block removed.

    The block is located structurally (top k−u entries zero) and always has
    (q^u − 1)/(q − 1) columns.
    """
    spec = MacDonaldSpec(q, k, u)
    simplex = simplex_generator(q, k, column_limit)
    deleted = set(macdonald_deleted_columns(simplex, u))
    keep = [j for j in range(simplex.n) if j not in deleted]
    g = simplex.as_array()[:, keep]
    logger.info(
        "Built MacDonald generator M_{},{}({}): {}x{} ({} columns removed)",
        k,
        u,
        q,
        *g.shape,
        len(deleted),
    )
    assert g.shape[1] == spec.n
    return GeneratorMatrix.from_array(q, g)


# ---------------------------------------------------------------------------
# Repetition codes
# ---------------------------------------------------------------------------


def repetition_cardinality(q: int, v: int) -> int:
    """Size of the subgroup generated by v, q / gcd(q, v)."""
    return q // gcd(q, v)


def repetition_generator(q: int, n: int, v: int) -> GeneratorMatrix:
    """
    The 1×n matrix [v v … v]: unit repetition when v is a unit, zero-divisor
    repetition otherwise.

    Raises:
        DegenerateGeneratorError: If v == 0.
        DomainError: If v is outside [1, q) or n < 1.
    """
    check_modulus(q)
    if v == 0:
        raise DegenerateGeneratorError(q)
    if not 1 <= v < q:
        raise DomainError("v", v, f"a nonzero residue in [1, {q})")
    if n < 1:
        raise DomainError("n", n, "n >= 1")
    if gcd(q, v) != 1 and q % v:
        logger.warning(
            "v={} does not divide q={}: the code has q/gcd(q,v)={} words, "
            "q/v is not an integer",
            v,
            q,
            repetition_cardinality(q, v),
        )
    return GeneratorMatrix.from_rows(q, [[v] * n])


def full_repetition_generator(q: int, n: int) -> GeneratorMatrix:
    """The 1×(q−1)n matrix of n ones, then n twos, …, then n copies of q−1."""
    check_modulus(q)
    if n < 1:
        raise DomainError("n", n, "n >= 1")
    if q % 2:
        logger.warning("Full repetition code over odd q={}", q)
    row = [symbol for symbol in range(1, q) for _ in range(n)]
    return GeneratorMatrix.from_rows(q, [row])


# ---------------------------------------------------------------------------
# D-extension and compositions
# ---------------------------------------------------------------------------


def extend_D(code: LinearCode | GeneratorMatrix) -> GeneratorMatrix:
    """
    Rows (g, 0, g, g, …, g) for each generator row g (q copies of g), then
    the row (0^n, 1, 1^n, 2^n, …, (q−1)^n). Length qn + 1, k + 1 rows.
    """
    g = code.generator if isinstance(code, LinearCode) else code
    q, n = g.q, g.n
    base = g.as_array()
    lifted = np.hstack(
        [base, np.zeros((g.k, 1), dtype=np.int64)] + [base] * (q - 1)
    )
    extra = np.concatenate(
        [np.zeros(n, dtype=np.int64), [1]]
        + [np.full(n, i, dtype=np.int64) for i in range(1, q)]
    )
    return GeneratorMatrix.from_array(q, np.vstack([lifted, extra]))


def simplex_via_extension(q: int, k: int) -> GeneratorMatrix:
    """
    S_k obtained by iterating the D-extension from the code generated by [1],
    with the adjoined row moved to the top after every step.
    """
    SimplexSpec(q, k)
    g = GeneratorMatrix.from_rows(q, [[1]])
    for _ in range(1, k):
        extended = extend_D(g).as_array()
        g = GeneratorMatrix.from_array(q, np.vstack([extended[-1:], extended[:-1]]))
    return g


def compose_direct_sum(
    g0: GeneratorMatrix, g1: GeneratorMatrix, a: Sequence[Sequence[int]] | None = None
) -> GeneratorMatrix:
    """
    The block matrix [[0 | G1], [G0 | A]]; A defaults to zero.

    Raises:
        DimensionError: On modulus or block-shape mismatch.
    """
    if g0.q != g1.q:
        raise DimensionError(f"Z_{g0.q}", f"Z_{g1.q}")
    q = g0.q
    block = (
        np.zeros((g0.k, g1.n), dtype=np.int64)
        if a is None
        else np.asarray(a, dtype=np.int64) % q
    )
    if block.shape != (g0.k, g1.n):
        raise DimensionError(f"A of shape {block.shape}", f"({g0.k}, {g1.n})")
    top = np.hstack([np.zeros((g1.k, g0.n), dtype=np.int64), g1.as_array()])
    bottom = np.hstack([g0.as_array(), block])
    return GeneratorMatrix.from_array(q, np.vstack([top, bottom]))


def append_columns(
    generator: GeneratorMatrix, columns: Sequence[Sequence[int]]
) -> GeneratorMatrix:
    """Append r columns given as an r×k nested sequence."""
    extra = np.asarray(columns, dtype=np.int64).reshape(-1, generator.k).T
    return GeneratorMatrix.from_array(
        generator.q, np.hstack([generator.as_array(), extra % generator.q])
    )


def puncture_columns(
    generator: GeneratorMatrix, indices: Sequence[int]
) -> GeneratorMatrix:
    """Delete the given column indices; at least one column must remain."""
    drop = set(indices)
    keep = [j for j in range(generator.n) if j not in drop]
    if not keep:
        raise DomainError("punctured length", 0, "n >= 1")
    return GeneratorMatrix.from_array(generator.q, generator.as_array()[:, keep])
