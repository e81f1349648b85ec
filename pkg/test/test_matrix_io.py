"""Tests for zqcodes.matrix_io: matrix file parsing and writing."""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.append(str(Path(__file__).resolve().parent.parent))
from zqcodes.code import GeneratorMatrix
from zqcodes.constructions import macdonald_generator, simplex_generator
from zqcodes.domain import MatrixParseError
from zqcodes.matrix_io import format_matrix, read_matrix, write_matrix


@pytest.fixture
def write(tmp_path):
    def _write(text):
        path = tmp_path / "g.txt"
        path.write_text(text)
        return path

    return _write


def test_read_simplex_g2(write):
    """Test reading G_2 over Z_4."""
    path = write("4 2 5\n0 1 1 2 3\n1 0 1 1 1\n")
    assert read_matrix(path) == simplex_generator(4, 2)


def test_comments_and_blank_lines_ignored(write):
    """Test comment and blank lines are skipped anywhere."""
    path = write("# S_2 over Z_4\n\n4 2 5\n# first row\n0 1 1 2 3\n\n1 0 1 1 1\n")
    assert read_matrix(path) == simplex_generator(4, 2)


def test_format_matrix():
    g = GeneratorMatrix.from_rows(4, [[0, 1, 1, 2, 3], [1, 0, 1, 1, 1]])
    assert format_matrix(g) == "4 2 5\n0 1 1 2 3\n1 0 1 1 1\n"


def test_out_of_range_entry_reports_location(write):
    """Test an entry outside [0, q) is reported at its line and column."""
    path = write("4 2 5\n0 1 1 2 3\n1 0 4 1 1\n")
    with pytest.raises(MatrixParseError) as info:
        read_matrix(path)
    assert (info.value.line, info.value.column) == (3, 5)
    assert "row 2 col 3" in info.value.reason
    assert str(info.value).startswith(f"{path}:3:5:")


def test_ragged_row(write):
    """Test a short row is reported."""
    path = write("4 2 3\n1 2 3\n1 2\n")
    with pytest.raises(MatrixParseError) as info:
        read_matrix(path)
    assert info.value.line == 3
    assert "row 2 has 2 entries" in info.value.reason


def test_missing_row(write):
    """Test a missing row is reported after the last line."""
    path = write("4 2 3\n1 2 3\n")
    with pytest.raises(MatrixParseError) as info:
        read_matrix(path)
    assert info.value.line == 3
    assert "expected 2 rows" in info.value.reason


def test_extra_row(write):
    path = write("4 1 2\n1 2\n3 3\n")
    with pytest.raises(MatrixParseError) as info:
        read_matrix(path)
    assert info.value.line == 3


def test_non_integer_token(write):
    """Test a non-integer token is reported at its column."""
    path = write("4 1 3\n1 x 3\n")
    with pytest.raises(MatrixParseError) as info:
        read_matrix(path)
    assert (info.value.line, info.value.column) == (2, 3)


@pytest.mark.parametrize("text", ["", "# only a comment\n", "4 2\n1 2\n", "1 1 1\n0\n"])
def test_bad_header(write, text):
    """Test malformed headers raise MatrixParseError."""
    with pytest.raises(MatrixParseError):
        read_matrix(write(text))


def test_write_then_read(tmp_path):
    """Test written matrices read back unchanged."""
    rng = np.random.default_rng(6)
    g = GeneratorMatrix.from_array(6, rng.integers(0, 6, size=(3, 7)))
    path = write_matrix(g, tmp_path / "random.txt")
    assert read_matrix(path) == g

    m = macdonald_generator(4, 3, 2)
    assert read_matrix(write_matrix(m, tmp_path / "m.txt")) == m
