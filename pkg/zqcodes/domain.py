"""
Core domain: enums, immutable result records and all package exceptions.

Nothing here imports from the rest of the package; this is the
innermost layer and has zero side-effects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------


class ElementKind(str, Enum):
    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"


class RadiusMethod(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BFS = "bfs"
    SAMPLED = "sampled-lower-bound"


class RepetitionKind(str, Enum):
    UNIT = "unit"
    ZERO_DIVISOR = "zero-divisor"
    FULL = "full"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_COMPUTABLE = "not-computable"


class Evidence(str, Enum):
    EXACT = "exact"  # ground truth computed exhaustively
    SAMPLED = "sampled"  # only a sampled lower bound was available
    FORMULA = "formula"  # pure rational identity, no code involved


class TheoremId(str, Enum):
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    D_EXTENSION = "thm-D-extension"
    COR_D = "cor-D"
    SIMPLEX_PARAMS = "thm-simplex-params"
    DUAL_PERFECT = "dual-perfect"
    REPETITION_RADIUS = "thm-repetition-radius"
    FULL_REPETITION_RADIUS = "thm-full-repetition-radius"
    SIMPLEX_RADIUS_BOUND = "thm-simplex-radius-bound"
    MACDONALD_BOUND = "thm-macdonald-bound"
    PROP_APPEND = "prop-append-puncture"
    PROP_DIRECT_SUM = "prop-direct-sum"


# ---------------------------------------------------------------------------
# Result records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CodeSummary:
    """
    Exact parameters of an enumerated code.

    Attributes:
        q: Modulus of the ambient ring.
        n: Code length.
        k: Number of generator rows (not a dimension: rows may be dependent).
        cardinality: True number of codewords M.
        min_distance: Minimum nonzero weight, ``None`` when M == 1.
        weight_distribution: Sorted ``(weight, count)`` pairs.
    """

    q: int
    n: int
    k: int
    cardinality: int
    min_distance: int | None
    weight_distribution: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        d = self.min_distance if self.min_distance is not None else "undefined"
        return f"[{self.n}, {self.k}] M={self.cardinality} d={d}"


@dataclass(frozen=True)
class RadiusResult:
    """Covering radius value with the engine that produced it."""

    value: int
    method: RadiusMethod
    states_visited: int
    n: int

    @property
    def exact(self) -> bool:
        return self.method is not RadiusMethod.SAMPLED

    def __str__(self) -> str:
        tag = "exact" if self.exact else "lower bound"
        return f"R = {self.value} ({tag})"


@dataclass(frozen=True)
class Interval:
    """Closed integer interval; ``lower == upper`` means the value is known."""

    lower: int
    upper: int

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        return str(self.lower) if self.is_exact else f"[{self.lower}, {self.upper}]"


@dataclass(frozen=True)
class BoundReport:
    """
    Outcome of checking one formula against computed ground truth.

    Attributes:
        theorem_id: Which statement was checked.
        inputs: Parameter map the check ran with (sorted for stable output).
        formula_value: Exact rational predicted by the formula or bound.
        computed_value: Ground truth, or an interval when only sampled.
        verdict: pass / fail / not-computable.
        evidence: How strong the computed side is.
        notes: Free-text details (sub-checks, floors applied, gaps).
    """

    theorem_id: TheoremId
    inputs: tuple[tuple[str, int], ...]
    formula_value: Fraction | None
    computed_value: Interval | None
    verdict: Verdict
    evidence: Evidence = Evidence.EXACT
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def sort_key(self) -> tuple[str, tuple[int, ...]]:
        return (self.theorem_id.value, tuple(v for _, v in self.inputs))

    def __str__(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.inputs)
        formula = "-" if self.formula_value is None else str(self.formula_value)
        computed = "-" if self.computed_value is None else str(self.computed_value)
        status = self.verdict.value
        if self.verdict is Verdict.PASS and self.evidence is Evidence.SAMPLED:
            status = "pass (consistent)"
        return (
            f"{self.theorem_id.value} {params}: formula={formula} "
            f"computed={computed} → {status}"
        )


# ---------------------------------------------------------------------------
# Exceptions
# ---------------------------------------------------------------------------


class ZqError(Exception):
    """Base for all package-specific errors."""


class DomainError(ZqError):
    """A parameter lies outside the range an operation is defined on."""

    def __init__(self, what: str, value: object, expected: str) -> None:
        super().__init__(f"Invalid {what}={value!r}: expected {expected}.")
        self.what = what
        self.value = value
        self.expected = expected


class DimensionError(ZqError):
    """Length or modulus mismatch between vectors, rows or scalars."""

    def __init__(self, left: str, right: str) -> None:
        super().__init__(f"Shape mismatch: {left} vs {right}.")
        self.left = left
        self.right = right


class ResourceError(ZqError):
    """Raised instead of returning a partial result when a budget is exceeded."""

    def __init__(self, what: str, states: int, limit: int) -> None:
        super().__init__(
            f"{what} needs {states} states, budget is {limit}. "
            "Raise the limit or pick smaller parameters."
        )
        self.what = what
        self.states = states
        self.limit = limit


class UndefinedDistanceError(ZqError):
    def __init__(self, n: int) -> None:
        super().__init__(
            f"Minimum distance is undefined for the zero code of length {n}."
        )
        self.n = n


class DegenerateGeneratorError(ZqError):
    def __init__(self, q: int) -> None:
        super().__init__(f"Repetition symbol 0 generates the zero code over Z_{q}.")
        self.q = q


class MatrixParseError(ZqError):
    def __init__(self, path: str, line: int, column: int, reason: str) -> None:
        super().__init__(f"{path}:{line}:{column}: {reason}")
        self.path = path
        self.line = line
        self.column = column
        self.reason = reason


class UnknownTheoremError(ZqError):
    def __init__(self, theorem_id: str) -> None:
        known = ", ".join(t.value for t in TheoremId)
        super().__init__(f"Unknown theorem id '{theorem_id}'. Known: {known}.")
        self.theorem_id = theorem_id
