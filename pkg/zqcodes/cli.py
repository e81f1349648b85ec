"""
Command-line frontend: thin wrapper over the library.

Responsibilities (only):
  - Parse and validate arguments (via click)
  - Delegate to constructions, code model, radius engines and verifier
  - Translate package exceptions → exit codes
  - Render text or JSON reports

Commands:
  construct <family>   Write a generator matrix file
  params FILE          Exact parameters and weight distribution
  radius FILE          Covering radius by one engine
  verify <theorem-id>  Run a verification suite

Exit codes: 0 success, 1 verification failure, 2 usage / domain / parse
error, 3 resource budget exceeded.
"""

from __future__ import annotations

import asyncio
import sys
from pathlib import Path
from typing import Sequence

import click
from loguru import logger

from . import __version__
from .code import enumerate_codewords
from .config import Budgets, parse_limit
from .constructions import (
    extend_D,
    full_repetition_generator,
    macdonald_generator,
    repetition_generator,
    simplex_generator,
)
from .domain import RadiusMethod, ResourceError, TheoremId, ZqError
from .hooks import VerdictTally, log_report
from .matrix_io import read_matrix, write_matrix
from .radius import covering_radius
from .reports import BoundRecord, CodeSummaryRecord, RadiusRecord, ReportDocument
from .verifier import VerificationRunner

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

FAMILIES = ("simplex", "macdonald", "repetition", "full-repetition", "extend")
METHODS = {
    "exhaustive": RadiusMethod.EXHAUSTIVE,
    "bfs": RadiusMethod.BFS,
    "sample": RadiusMethod.SAMPLED,
}


def _exit_code(exc: ZqError) -> int:
    """Map package exceptions to process exit codes."""
    if isinstance(exc, ResourceError):
        return EXIT_RESOURCE
    return EXIT_USAGE


def _exit(exc: ZqError) -> click.exceptions.Exit:
    click.echo(f"Error: {exc}", err=True)
    return click.exceptions.Exit(_exit_code(exc))


def _configure_logging(verbosity: int) -> None:
    level = {0: "WARNING", 1: "INFO"}.get(verbosity, "DEBUG")
    logger.remove()
    logger.add(
        lambda message: click.echo(message, err=True, nl=False),
        level=level,
        format="<level>{level: <8}</level> {message}",
        colorize=False,
    )


def _limit(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> int | None:
    if value is None:
        return None
    try:
        return parse_limit(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param) from None


def _command_echo(ctx: click.Context) -> list[str]:
    options = (
        f"--{name}={value}"
        for name, value in sorted(ctx.params.items())
        if value is not None
    )
    return [ctx.command_path, *options]


def _emit(ctx: click.Context, records: list, as_json: bool, lines: list[str]) -> None:
    if as_json:
        click.echo(ReportDocument.build(_command_echo(ctx), records).to_json())
    else:
        for line in lines:
            click.echo(line)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


@click.group()
@click.version_option(__version__, prog_name="zqcodes")
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logs.")
@click.pass_context
def cli(ctx: click.Context, verbose: int) -> None:
    """Linear codes over Z_q: construct, measure and verify."""
    _configure_logging(verbose)
    ctx.obj = Budgets.from_env()


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--q", "q", type=int, help="Modulus.")
@click.option("--k", "k", type=int, help="Rows (simplex, macdonald).")
@click.option("--u", "u", type=int, help="MacDonald deletion index.")
@click.option("--n", "n", type=int, help="Repetition length.")
@click.option("--v", "v", type=int, help="Repetition symbol.")
@click.option(
    "--in",
    "source",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Base matrix for extend.",
)
@click.option(
    "--out", "out", required=True, type=click.Path(dir_okay=False, path_type=Path)
)
def construct(
    family: str,
    q: int | None,
    k: int | None,
    u: int | None,
    n: int | None,
    v: int | None,
    source: Path | None,
    out: Path,
) -> None:
    """Write the generator matrix of a code family to OUT."""
    needed = {
        "simplex": ("q", "k"),
        "macdonald": ("q", "k", "u"),
        "repetition": ("q", "n", "v"),
        "full-repetition": ("q", "n"),
        "extend": ("source",),
    }[family]
    given = {"q": q, "k": k, "u": u, "n": n, "v": v, "source": source}
    missing = [name for name in needed if given[name] is None]
    if missing:
        flag = "in" if missing[0] == "source" else missing[0]
        raise click.UsageError(f"{family} needs --{flag}")

    try:
        if family == "simplex":
            generator = simplex_generator(q, k)
        elif family == "macdonald":
            generator = macdonald_generator(q, k, u)
        elif family == "repetition":
            generator = repetition_generator(q, n, v)
        elif family == "full-repetition":
            generator = full_repetition_generator(q, n)
        else:
            base = read_matrix(source)
            if q is not None and q != base.q:
                raise click.UsageError(
                    f"--q {q} does not match the file's q={base.q}"
                )
            generator = extend_D(base)
        write_matrix(generator, out)
    except ZqError as exc:
        raise _exit(exc)
    click.echo(
        f"{family}: {generator.k}x{generator.n} over Z_{generator.q} → {out}"
    )


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
@click.pass_context
def params(ctx: click.Context, file: Path, as_json: bool) -> None:
    """Exact n, k, M, d and weight distribution of the code in FILE."""
    budgets: Budgets = ctx.obj
    try:
        code = enumerate_codewords(read_matrix(file), budgets.enumerate)
        summary = code.summary
    except ZqError as exc:
        raise _exit(exc)
    weights = " ".join(f"{w}:{c}" for w, c in summary.weight_distribution)
    _emit(
        ctx,
        [CodeSummaryRecord.from_summary(summary)],
        as_json,
        [str(summary), f"weights {weights}"],
    )


@cli.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--method", type=click.Choice(sorted(METHODS)), default="bfs", show_default=True
)
@click.option("--limit", callback=_limit, help="State budget, N or B^E.")
@click.option("--samples", type=click.IntRange(min=1), help="Sampled words.")
@click.option("--seed", type=int, help="Sampler seed.")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
@click.pass_context
def radius(
    ctx: click.Context,
    file: Path,
    method: str,
    limit: int | None,
    samples: int | None,
    seed: int | None,
    as_json: bool,
) -> None:
    """Covering radius of the code in FILE."""
    budgets: Budgets = ctx.obj
    engine = METHODS[method]
    if engine is RadiusMethod.SAMPLED:
        options = {
            "samples": samples or budgets.samples,
            "seed": budgets.seed if seed is None else seed,
        }
    elif engine is RadiusMethod.BFS:
        options = {"limit": limit or budgets.bfs}
    else:
        options = {"limit": limit or budgets.exhaustive}
    try:
        code = enumerate_codewords(read_matrix(file), budgets.enumerate)
        result = covering_radius(code, engine, **options)
    except ZqError as exc:
        raise _exit(exc)
    _emit(ctx, [RadiusRecord.from_result(result)], as_json, [str(result)])


@cli.command()
@click.argument("theorem_id", type=click.Choice([t.value for t in TheoremId]))
@click.option("--q", "q", type=int, required=True, help="Modulus.")
@click.option("--kmax", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--nmax", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), help="Concurrent checks.")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
@click.pass_context
def verify(
    ctx: click.Context,
    theorem_id: str,
    q: int,
    kmax: int,
    nmax: int,
    workers: int | None,
    as_json: bool,
) -> None:
    """Check one statement over its parameter suite."""
    budgets: Budgets = ctx.obj
    tally = VerdictTally()
    runner = VerificationRunner(
        budgets, hooks={"on_report": [log_report, tally]}, workers=workers
    )
    try:
        reports = asyncio.run(runner.run_suite(theorem_id, q, kmax, nmax))
    except ZqError as exc:
        raise _exit(exc)

    _emit(
        ctx,
        [BoundRecord.from_report(report) for report in reports],
        as_json,
        [str(report) for report in reports] + [tally.summary()],
    )
    if tally.failed:
        ctx.exit(EXIT_FAILED)


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code instead of exiting."""
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="zqcodes",
            standalone_mode=False,
        )
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAILED
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
