"""Tests for zqcodes.code: enumeration, parameters, duals and perfection."""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.append(str(Path(__file__).resolve().parent.parent))
from zqcodes.arithmetic import ResidueVector
from zqcodes.code import (
    GeneratorMatrix,
    code_from_words,
    dual_code,
    enumerate_codewords,
    is_perfect,
    is_submodule,
    min_distance,
    packing_radius,
    pairwise_min_distance,
    sphere_volume,
    weight_distribution,
)
from zqcodes.domain import (
    DimensionError,
    DomainError,
    ResourceError,
    UndefinedDistanceError,
)

S2_Q4 = [[0, 1, 1, 2, 3], [1, 0, 1, 1, 1]]


@pytest.fixture
def simplex_q4():
    return enumerate_codewords(GeneratorMatrix.from_rows(4, S2_Q4))


# ---------------------------------------------------------------------------
# GeneratorMatrix
# ---------------------------------------------------------------------------


def test_generator_shape_and_columns():
    """Test the generator exposes its shape and columns."""
    g = GeneratorMatrix.from_rows(4, S2_Q4)
    assert (g.k, g.n) == (2, 5)
    assert g.columns()[0] == (0, 1)
    assert g.columns()[-1] == (3, 1)
    assert g.as_array().shape == (2, 5)


def test_generator_reduces_entries():
    """Test generator entries are reduced mod q."""
    g = GeneratorMatrix.from_rows(4, [[5, -1]])
    assert g.rows[0].entries == (1, 3)


def test_generator_ragged_rows_raise():
    """Test ragged rows raise DimensionError."""
    with pytest.raises(DimensionError):
        GeneratorMatrix.from_rows(4, [[1, 2, 3], [1, 2]])


def test_generator_needs_a_row():
    """Test an empty generator raises DomainError."""
    with pytest.raises(DomainError):
        GeneratorMatrix(4, ())


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def test_simplex_q4_parameters(simplex_q4):
    """Test S_2 over Z_4 is [5, 2] with 16 words and d = 3."""
    assert simplex_q4.cardinality == 16
    assert min_distance(simplex_q4) == 3
    assert str(simplex_q4.summary) == "[5, 2] M=16 d=3"


def test_simplex_q4_weight_distribution(simplex_q4):
    """Test the weight distribution of S_2 over Z_4."""
    assert weight_distribution(simplex_q4) == {0: 1, 3: 2, 4: 11, 5: 2}
    assert simplex_q4.summary.weight_distribution == ((0, 1), (3, 2), (4, 11), (5, 2))


def test_cardinality_is_counted_not_inferred():
    """Test M is the number of distinct words, not q^k."""
    # [2] over Z_4 spans {0, 2}: M = 2, not 4.
    code = enumerate_codewords(GeneratorMatrix.from_rows(4, [[2]]))
    assert code.cardinality == 2
    assert code.words.tolist() == [[0], [2]]


def test_dependent_rows_deduplicated():
    """Test dependent rows do not inflate the word count."""
    code = enumerate_codewords(GeneratorMatrix.from_rows(4, [[1, 1], [2, 2]]))
    assert code.cardinality == 4


def test_words_are_sorted_and_read_only(simplex_q4):
    """Test codewords are sorted and cannot be modified."""
    words = simplex_q4.words.tolist()
    assert words == sorted(words)
    with pytest.raises(ValueError):
        simplex_q4.words[0, 0] = 1


def test_enumeration_is_a_submodule(simplex_q4):
    """Test the enumerated set is closed under sums and scalars."""
    assert is_submodule(simplex_q4)


def test_contains(simplex_q4):
    """Test membership accepts vectors and plain sequences."""
    assert simplex_q4.contains([0, 2, 2, 0, 2])
    assert simplex_q4.contains(ResidueVector.of(4, [1, 0, 1, 1, 1]))
    assert not simplex_q4.contains([1, 1, 1, 1, 1])


def test_enumeration_budget():
    """Test enumeration beyond its budget raises ResourceError."""
    g = GeneratorMatrix.from_rows(4, S2_Q4)
    with pytest.raises(ResourceError) as info:
        enumerate_codewords(g, limit=15)
    assert info.value.states == 16
    assert info.value.limit == 15


def test_zero_code_has_undefined_distance():
    """Test the zero code has no minimum distance."""
    code = enumerate_codewords(GeneratorMatrix.from_rows(4, [[0, 0]]))
    assert code.cardinality == 1
    assert code.summary.min_distance is None
    assert "d=undefined" in str(code.summary)
    with pytest.raises(UndefinedDistanceError):
        min_distance(code)
    with pytest.raises(UndefinedDistanceError):
        pairwise_min_distance(code)


@pytest.mark.parametrize(
    "q,rows",
    [
        (4, S2_Q4),
        (6, [[1, 2, 3], [0, 3, 1]]),
        (2, [[1, 1, 0, 1], [0, 1, 1, 1]]),
        (8, [[2, 4, 6]]),
    ],
)
def test_min_weight_equals_min_pairwise_distance(q, rows):
    """Test minimum weight equals minimum pairwise distance."""
    code = enumerate_codewords(GeneratorMatrix.from_rows(q, rows))
    assert pairwise_min_distance(code) == min_distance(code)


def test_pairwise_budget(simplex_q4):
    """Test the pairwise scan beyond its budget raises ResourceError."""
    with pytest.raises(ResourceError):
        pairwise_min_distance(simplex_q4, limit=100)


def test_code_from_words_regenerates_span(simplex_q4):
    """Test a word set rebuilds a generator with the same span."""
    rebuilt = code_from_words(4, simplex_q4.words)
    assert rebuilt.word_set == simplex_q4.word_set
    assert enumerate_codewords(rebuilt.generator).word_set == simplex_q4.word_set


# ---------------------------------------------------------------------------
# Dual and perfection
# ---------------------------------------------------------------------------


def test_sphere_volume():
    """Test the Hamming ball sizes."""
    assert sphere_volume(4, 5, 1) == 16
    assert sphere_volume(2, 3, 1) == 4
    assert sphere_volume(4, 5, 0) == 1


def test_dual_of_simplex_q4_has_distance_two(simplex_q4):
    """Test the Z_4 dual of S_2 is [5, 64, 2]: 2·(0,1) = 2·(2,1) gives weight 2."""
    dual = dual_code(simplex_q4)
    assert dual.n == 5
    assert dual.cardinality == 64
    assert min_distance(dual) == 2
    assert dual.contains([2, 0, 0, 2, 0])
    assert dual.contains([0, 0, 2, 0, 2])
    assert packing_radius(dual) == 0
    assert not is_perfect(dual)
    assert is_submodule(dual)


def test_dual_of_binary_simplex_is_repetition():
    """Test the binary dual of S_2 is the perfect repetition code."""
    code = enumerate_codewords(GeneratorMatrix.from_rows(2, [[0, 1, 1], [1, 0, 1]]))
    dual = dual_code(code)
    assert dual.words.tolist() == [[0, 0, 0], [1, 1, 1]]
    assert min_distance(dual) == 3
    assert is_perfect(dual)


def test_dual_is_orthogonal(simplex_q4):
    """Test every dual word is orthogonal to every codeword."""
    dual = dual_code(simplex_q4)
    products = (dual.words @ simplex_q4.words.T) % 4
    assert not products.any()


def test_simplex_itself_is_not_perfect(simplex_q4):
    assert not is_perfect(simplex_q4)


def test_dual_budget(simplex_q4):
    """Test the dual scan beyond its budget raises ResourceError."""
    with pytest.raises(ResourceError):
        dual_code(simplex_q4, limit=4**5 - 1)
