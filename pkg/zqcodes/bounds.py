"""
Closed-form parameter formulas and covering-radius bounds.

Everything is exact: values are ``int`` or ``Fraction`` and a floor is
applied only where the statement writes one, or explicitly through
:func:`floor_bound` when an integer radius is compared to a rational bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import NamedTuple

import numpy as np

from .arithmetic import euler_phi, require_even
from .code import LinearCode, min_distance
from .constructions import simplex_length
from .domain import DomainError, RepetitionKind


@dataclass(frozen=True)
class FormulaContext:
    """
    Derived quantities for one (q, k, u, r) evaluation. φ(q) and every n_j
    are recomputed here, never taken from the caller.
    """

    q: int
    k: int = 2
    u: int | None = None
    r: int | None = None

    @property
    def phi(self) -> int:
        return euler_phi(self.q)

    @property
    def half(self) -> int:
        return self.q // 2

    def n(self, j: int) -> int:
        return simplex_length(self.q, j)

    @property
    def growth(self) -> int:
        """q² − q − φ(q), the per-level slope shared by both radius bounds."""
        return self.q * self.q - self.q - self.phi


def floor_bound(value: Fraction | int) -> int:
    """Largest integer radius compatible with a rational upper bound."""
    return floor(value)


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------


class SimplexParams(NamedTuple):
    n: int
    k: int
    d: int


def simplex_params_formula(q: int, k: int) -> SimplexParams:
    """[n_k, k, (q/2)·n_{k−1} + 1] for even q, k >= 2."""
    require_even(q, "the Simplex distance formula")
    if k < 2:
        raise DomainError("k", k, "k >= 2")
    ctx = FormulaContext(q, k)
    return SimplexParams(ctx.n(k), k, ctx.half * ctx.n(k - 1) + 1)


def dual_simplex_params(q: int, k: int) -> SimplexParams:
    """[n_k, n_k − k, 3]; the dual has q^(n_k − k) words."""
    if k < 2:
        raise DomainError("k", k, "k >= 2")
    n = simplex_length(q, k)
    return SimplexParams(n, n - k, 3)


def full_repetition_distance_formula(q: int, n: int) -> int:
    require_even(q, "the full repetition distance")
    return (q // 2) * n


class DExtensionTerms(NamedTuple):
    scaled: int  # q·d, multiplier 0
    unit: int  # (q−1)n + 1, unit multipliers
    half: int  # min over nonzero c of (q/2)n + 1 + (q/2)(n − r_0 − r_{q/2})

    @property
    def minimum(self) -> int:
        return min(self)


def d_extension_terms(code: LinearCode) -> DExtensionTerms:
    """
    The three candidates for d(D). The q/2 term uses the per-codeword
    symbol counts r_0, r_{q/2} and is minimised over nonzero codewords.
    """
    q = require_even(code.q, "the D-extension distance formula")
    n = code.n
    d = min_distance(code)
    half = q // 2
    words = code.words[code.weights > 0]
    r0 = (words == 0).sum(axis=1)
    rh = (words == half).sum(axis=1)
    third = half * n + 1 + half * (n - r0 - rh)
    return DExtensionTerms(q * d, (q - 1) * n + 1, int(third.min()))


def d_of_D_formula(code: LinearCode) -> int:
    return d_extension_terms(code).minimum


def d_extension_weights(code: LinearCode) -> dict[int, int]:
    """
    Minimum weight of the nonzero D-extension codewords per multiplier α of
    the adjoined row, computed from C alone:
    wt = wt(c) + [α ≠ 0] + Σ_{i=1}^{q−1} wt(c + α·i·𝟏).
    """
    q = code.q
    words = code.words
    result: dict[int, int] = {}
    for alpha in range(q):
        total = (words != 0).sum(axis=1) + (1 if alpha else 0)
        for i in range(1, q):
            total = total + (((words + alpha * i) % q) != 0).sum(axis=1)
        if alpha == 0:
            total = total[code.weights > 0]
        if total.size:
            result[alpha] = int(total.min())
    return result


def has_half_codeword(code: LinearCode) -> bool:
    """Whether some nonzero codeword has every coordinate in {0, q/2}."""
    q = require_even(code.q, "the {0, q/2} codeword test")
    words = code.words[code.weights > 0]
    return bool(np.isin(words, (0, q // 2)).all(axis=1).any())


def corollary_D_applies(code: LinearCode) -> bool:
    """Hypothesis of d(D) = (q/2)n + 1: a {0, q/2} codeword and n <= 2d − 1."""
    return has_half_codeword(code) and code.n <= 2 * min_distance(code) - 1


def corollary_D_formula(code: LinearCode) -> int:
    require_even(code.q, "the D-extension corollary")
    return (code.q // 2) * code.n + 1


# ---------------------------------------------------------------------------
# Covering radius formulas and bounds
# ---------------------------------------------------------------------------


def repetition_radius_formula(q: int, n: int, kind: RepetitionKind | str) -> int:
    """
    unit → ⌊(q−1)n/q⌋; zero-divisor → n;
    full → ⌊(q−1)φ(q)n/q⌋ + (q−1−φ(q))n.
    """
    if n < 1:
        raise DomainError("n", n, "n >= 1")
    kind = RepetitionKind(kind)
    if kind is RepetitionKind.UNIT:
        return ((q - 1) * n) // q
    if kind is RepetitionKind.ZERO_DIVISOR:
        return n
    phi = euler_phi(q)
    return ((q - 1) * phi * n) // q + (q - 1 - phi) * n


def simplex_radius_upper_bound(q: int, k: int, base_R_S2: int) -> Fraction:
    """
    Bound on R(S_{k+1}):
    ((k−1)(q−1)φ + (q²−q−φ)(q^{k+1} − q²)) / (q(q−1)²) + R(S_2).
    """
    require_even(q, "the Simplex radius bound")
    if k < 2:
        raise DomainError("k", k, "k >= 2")
    ctx = FormulaContext(q, k)
    numerator = (k - 1) * (q - 1) * ctx.phi + ctx.growth * (q ** (k + 1) - q * q)
    return Fraction(numerator, q * (q - 1) ** 2) + base_R_S2


def simplex_radius_bound_q4(k: int) -> Fraction:
    """The q = 4 specialisation with R(S_2) = 3: (5·4^{k+1} + 3k − 29)/18."""
    if k < 2:
        raise DomainError("k", k, "k >= 2")
    return Fraction(5 * 4 ** (k + 1) + 3 * k - 29, 18)


def macdonald_step_bound(q: int, k: int) -> Fraction:
    """Bound on R(M_{k+1,k}): ⌊(q−1)φ n_k / q⌋ + (q−1−φ) n_k + 1."""
    require_even(q, "the MacDonald radius bound")
    ctx = FormulaContext(q, k)
    n_k = ctx.n(k)
    return Fraction(((q - 1) * ctx.phi * n_k) // q + (q - 1 - ctx.phi) * n_k + 1)


def macdonald_radius_upper_bound(
    q: int, k: int, u: int, r: int, base_R: int | Fraction
) -> Fraction:
    """
    Bound on R(M_{k+1,u}) from R(M_{r,u}):
    ((k−r+1)(q−1)φ + (q²−q−φ) q^r (q^{k−r+1} − 1)) / (q(q−1)²) + R(M_{r,u}).

    With u == k the single-step bound :func:`macdonald_step_bound` is
    returned and ``r`` / ``base_R`` are not used.

    Raises:
        DomainError: If k < 2, u outside [2, k] or r outside [u, k].
    """
    require_even(q, "the MacDonald radius bound")
    if k < 2:
        raise DomainError("k", k, "k >= 2")
    if not 2 <= u <= k:
        raise DomainError("u", u, f"2 <= u <= {k}")
    if u == k:
        return macdonald_step_bound(q, k)
    if not u <= r <= k:
        raise DomainError("r", r, f"{u} <= r <= {k}")
    ctx = FormulaContext(q, k, u, r)
    numerator = (k - r + 1) * (q - 1) * ctx.phi + ctx.growth * q**r * (
        q ** (k - r + 1) - 1
    )
    return Fraction(numerator, q * (q - 1) ** 2) + base_R


def macdonald_corollary_bound(q: int, k: int, u: int) -> Fraction:
    """
    Bound on R(M_{k+1,u}) with the base radius replaced by the unfloored
    single-step bound on R(M_{u+1,u}):
    ((k−u)(q−1)φ + (q²−q−φ) q^{u+1} (q^{k−u} − 1)) / (q(q−1)²)
      + (q−1)φ n_u / q + (q−1−φ) n_u + 1.
    """
    require_even(q, "the MacDonald radius bound")
    if not 2 <= u <= k:
        raise DomainError("u", u, f"2 <= u <= {k}")
    ctx = FormulaContext(q, k, u)
    n_u = ctx.n(u)
    head = Fraction(
        (k - u) * (q - 1) * ctx.phi + ctx.growth * q ** (u + 1) * (q ** (k - u) - 1),
        q * (q - 1) ** 2,
    )
    return head + Fraction((q - 1) * ctx.phi * n_u, q) + (q - 1 - ctx.phi) * n_u + 1


def macdonald_unfloored_step(q: int, u: int) -> Fraction:
    """(q−1)φ n_u / q + (q−1−φ) n_u + 1, the single-step bound without floor."""
    ctx = FormulaContext(q, u)
    n_u = ctx.n(u)
    return Fraction((q - 1) * ctx.phi * n_u, q) + (q - 1 - ctx.phi) * n_u + 1
