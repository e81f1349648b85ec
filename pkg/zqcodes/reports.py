"""
JSON report schemas.

Each record translates one domain result into a stable, float-free JSON
shape. Rationals are written as ``"p/q"`` strings and intervals as
``[lower, upper]`` pairs, so identical runs produce byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from pydantic import BaseModel, Field

from . import __version__
from .domain import (
    BoundReport,
    CodeSummary,
    Evidence,
    Interval,
    RadiusMethod,
    RadiusResult,
    TheoremId,
    Verdict,
)


def format_fraction(value: Fraction) -> str:
    """Always ``p/q``, including denominator 1."""
    return f"{value.numerator}/{value.denominator}"


def format_interval(value: Interval) -> int | list[int]:
    return value.lower if value.is_exact else [value.lower, value.upper]


class CodeSummaryRecord(BaseModel):
    """
    Attributes:
        weight_distribution: ``[weight, count]`` pairs in increasing weight.
    """

    q: int
    n: int
    k: int
    cardinality: int
    min_distance: int | None
    weight_distribution: list[tuple[int, int]]

    @classmethod
    def from_summary(cls, summary: CodeSummary) -> "CodeSummaryRecord":
        return cls(
            q=summary.q,
            n=summary.n,
            k=summary.k,
            cardinality=summary.cardinality,
            min_distance=summary.min_distance,
            weight_distribution=list(summary.weight_distribution),
        )


class RadiusRecord(BaseModel):
    value: int
    method: RadiusMethod
    exact: bool
    states_visited: int

    @classmethod
    def from_result(cls, result: RadiusResult) -> "RadiusRecord":
        return cls(
            value=result.value,
            method=result.method,
            exact=result.exact,
            states_visited=result.states_visited,
        )


class BoundRecord(BaseModel):
    """
    Attributes:
        formula_value: Exact rational as ``"p/q"``, ``None`` if not evaluated.
        computed_value: Integer when exact, ``[lower, upper]`` when sampled.
    """

    theorem_id: TheoremId
    inputs: dict[str, int]
    formula_value: str | None
    computed_value: int | list[int] | None
    verdict: Verdict
    evidence: Evidence
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: BoundReport) -> "BoundRecord":
        return cls(
            theorem_id=report.theorem_id,
            inputs=dict(report.inputs),
            formula_value=(
                None
                if report.formula_value is None
                else format_fraction(report.formula_value)
            ),
            computed_value=(
                None
                if report.computed_value is None
                else format_interval(report.computed_value)
            ),
            verdict=report.verdict,
            evidence=report.evidence,
            notes=list(report.notes),
        )


Record = Union[CodeSummaryRecord, RadiusRecord, BoundRecord]


class ReportDocument(BaseModel):
    """
    Attributes:
        tool_version: Package version that produced the document.
        command: The command line, echoed.
        records: Results in the order they were produced.
        passed: False iff some bound record has verdict ``fail``.
    """

    tool_version: str
    command: str
    records: list[Record]
    passed: bool

    @classmethod
    def build(
        cls, command: Sequence[str], records: Sequence[Record]
    ) -> "ReportDocument":
        passed = all(
            record.verdict is not Verdict.FAIL
            for record in records
            if isinstance(record, BoundRecord)
        )
        return cls(
            tool_version=__version__,
            command=" ".join(command),
            records=list(records),
            passed=passed,
        )

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
