"""
Hooks system: decouple side effects from verification.

The runner hands every finished report to :meth:`HookRegistry.dispatch`;
listeners react. Nothing inside verifier.py knows what happens to a report
once it is produced.

Available hook events:
    on_report:  Fired for every finished report, whatever the verdict.
    on_fail:    Fired additionally when the verdict is ``fail``.
"""

from __future__ import annotations

from enum import Enum
from typing import Awaitable, Callable

from loguru import logger

from .domain import BoundReport, Verdict

AsyncHookFn = Callable[[BoundReport], Awaitable[None]]


class ReportEvent(str, Enum):
    ON_REPORT = "on_report"
    ON_FAIL = "on_fail"


def events_for(report: BoundReport) -> tuple[ReportEvent, ...]:
    """Events a report triggers, in firing order."""
    if report.verdict is Verdict.FAIL:
        return ReportEvent.ON_REPORT, ReportEvent.ON_FAIL
    return (ReportEvent.ON_REPORT,)


class HookRegistry:
    """Maps report events to lists of async callables."""

    def __init__(self) -> None:
        self._hooks: dict[ReportEvent, list[AsyncHookFn]] = {
            event: [] for event in ReportEvent
        }

    def register(self, event: ReportEvent | str, hook: AsyncHookFn) -> None:
        try:
            key = ReportEvent(event)
        except ValueError:
            raise ValueError(f"Unknown hook event: {event}") from None
        self._hooks[key].append(hook)

    def registered(self, event: ReportEvent | str) -> list[AsyncHookFn]:
        return list(self._hooks[ReportEvent(event)])

    async def fire(self, event: ReportEvent | str, report: BoundReport) -> int:
        """
        Await every hook for ``event`` in registration order.

        Returns:
            How many hooks raised. Their errors are logged, not propagated.
        """
        failed = 0
        for hook in self._hooks[ReportEvent(event)]:
            try:
                await hook(report)
            except Exception as e:
                failed += 1
                logger.error(
                    "Hook {} on {} for {} failed: {}",
                    getattr(hook, "__name__", type(hook).__name__),
                    ReportEvent(event).value,
                    report.theorem_id.value,
                    e,
                )
        return failed

    async def dispatch(self, report: BoundReport) -> int:
        """Fire every event the report's verdict triggers."""
        failed = 0
        for event in events_for(report):
            failed += await self.fire(event, report)
        return failed


# ---------------------------------------------------------------------------
# Built-in hooks
# ---------------------------------------------------------------------------


async def log_report(report: BoundReport) -> None:
    """One log line per report, at a level matching the verdict."""
    if report.verdict is Verdict.FAIL:
        logger.warning("{}", report)
    elif report.verdict is Verdict.NOT_COMPUTABLE:
        logger.info("{}", report)
    else:
        logger.success("{}", report)


class VerdictTally:
    """Counts verdicts as reports arrive; register it under ``on_report``."""

    def __init__(self) -> None:
        self.counts: dict[Verdict, int] = {verdict: 0 for verdict in Verdict}

    async def __call__(self, report: BoundReport) -> None:
        self.counts[report.verdict] += 1

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def failed(self) -> bool:
        return self.counts[Verdict.FAIL] > 0

    def summary(self) -> str:
        return (
            f"{self.total} checks: {self.counts[Verdict.PASS]} pass, "
            f"{self.counts[Verdict.FAIL]} fail, "
            f"{self.counts[Verdict.NOT_COMPUTABLE]} not computable"
        )
