"""
Plain-text generator matrix files.

    # optional comment lines
    q k n
    g11 g12 ... g1n
    ...
    gk1 gk2 ... gkn

Whitespace-separated ASCII, one matrix row per line. Blank lines and lines
starting with ``#`` are ignored anywhere in the file.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterator

from loguru import logger

from .code import GeneratorMatrix
from .domain import MatrixParseError

_TOKEN = re.compile(r"\S+")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, line


def _integers(path: str, number: int, line: str) -> list[tuple[int, int]]:
    """(value, 1-based column) for every token on the line."""
    values = []
    for match in _TOKEN.finditer(line):
        try:
            values.append((int(match.group()), match.start() + 1))
        except ValueError:
            raise MatrixParseError(
                path, number, match.start() + 1, f"not an integer: {match.group()!r}"
            ) from None
    return values


def read_matrix(path: Path | str) -> GeneratorMatrix:
    """
    Parse a matrix file.

    Raises:
        MatrixParseError: On a bad header, a non-integer token, an entry
            outside [0, q), a ragged row or a wrong row count. The error
            carries the 1-based line and column of the offending token.
    """
    path = Path(path)
    name = str(path)
    lines = list(_content_lines(path.read_text()))
    if not lines:
        raise MatrixParseError(name, 1, 1, "empty file, expected header 'q k n'")

    number, header = lines[0]
    fields = _integers(name, number, header)
    if len(fields) != 3:
        raise MatrixParseError(name, number, 1, "header must be exactly 'q k n'")
    (q, _), (k, k_col), (n, n_col) = fields
    if q < 2:
        raise MatrixParseError(name, number, 1, f"modulus q={q} must be >= 2")
    if k < 1:
        raise MatrixParseError(name, number, k_col, f"row count k={k} must be >= 1")
    if n < 1:
        raise MatrixParseError(name, number, n_col, f"length n={n} must be >= 1")

    body = lines[1:]
    if len(body) != k:
        if len(body) > k:
            where = body[k][0]
        else:
            where = (body[-1][0] if body else number) + 1
        raise MatrixParseError(
            name, where, 1, f"expected {k} rows, found {len(body)}"
        )

    rows: list[list[int]] = []
    for row_index, (number, line) in enumerate(body, start=1):
        entries = _integers(name, number, line)
        if len(entries) != n:
            column = entries[n][1] if len(entries) > n else len(line.rstrip()) + 1
            raise MatrixParseError(
                name,
                number,
                column,
                f"row {row_index} has {len(entries)} entries, expected {n}",
            )
        for entry_index, (value, column) in enumerate(entries, start=1):
            if not 0 <= value < q:
                raise MatrixParseError(
                    name,
                    number,
                    column,
                    f"row {row_index} col {entry_index}: {value} not in [0, {q})",
                )
        rows.append([value for value, _ in entries])

    logger.debug("Read {}x{} matrix over Z_{} from {}", k, n, q, path)
    return GeneratorMatrix.from_rows(q, rows)


def format_matrix(generator: GeneratorMatrix) -> str:
    header = f"{generator.q} {generator.k} {generator.n}"
    rows = (" ".join(str(v) for v in row.entries) for row in generator.rows)
    return "\n".join([header, *rows]) + "\n"


def write_matrix(generator: GeneratorMatrix, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(format_matrix(generator))
    logger.info(
        "Wrote {}x{} matrix over Z_{} → {}",
        generator.k,
        generator.n,
        generator.q,
        path,
    )
    return path
