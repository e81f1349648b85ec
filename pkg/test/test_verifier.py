"""Tests for zqcodes.verifier: per-statement checks, suites and the runner."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parent.parent))
from zqcodes import verifier
from zqcodes.code import GeneratorMatrix
from zqcodes.config import Budgets
from zqcodes.domain import (
    BoundReport,
    DomainError,
    Evidence,
    Interval,
    TheoremId,
    UnknownTheoremError,
    Verdict,
)
from zqcodes.verifier import (
    VerificationRunner,
    proposition_checks,
    resolve_params,
    suite_params,
    verify,
)

FAST = Budgets(samples=20_000)


# ---------------------------------------------------------------------------
# Single checks
# ---------------------------------------------------------------------------


def test_simplex_params_q4_k3():
    """Test the Simplex parameters of S_3 over Z_4."""
    report = verify("thm-simplex-params", {"q": 4, "k": 3})
    assert report.verdict is Verdict.PASS
    assert report.formula_value == Fraction(11)
    assert report.computed_value == Interval(11, 11)
    assert report.inputs == (("q", 4), ("k", 3))
    assert any("M=64" in note for note in report.notes)


@pytest.mark.parametrize("q", [2, 4, 6])
@pytest.mark.parametrize("k", [2, 3])
def test_simplex_params_grid(q, k):
    """Test the Simplex parameter check across q and k."""
    assert verify(TheoremId.SIMPLEX_PARAMS, {"q": q, "k": k}).verdict is Verdict.PASS


@pytest.mark.parametrize("k", [2, 3])
def test_binary_dual_simplex_is_perfect(k):
    """Test the binary dual Simplex code is a perfect Hamming code."""
    report = verify("dual-perfect", {"q": 2, "k": k})
    assert report.verdict is Verdict.PASS
    assert report.computed_value == Interval(3, 3)


def test_z4_dual_simplex_is_not_perfect():
    """Test the Z_4 dual of S_2 fails: it is [5, 64, 2], with a weight-2 witness."""
    report = verify("dual-perfect", {"q": 4, "k": 2})
    assert report.verdict is Verdict.FAIL
    assert report.formula_value == 3
    assert report.computed_value == Interval(2, 2)
    assert "dual [5, M=64, d=2]" in report.notes
    assert "weight-2 dual word (0, 0, 2, 0, 2)" in report.notes


def test_lemma1():
    """Test minimum weight equals pairwise distance on Simplex codes."""
    assert verify("lemma1", {"q": 4, "k": 2}).verdict is Verdict.PASS
    assert verify("lemma1", {"q": 6, "k": 2}).verdict is Verdict.PASS


@pytest.mark.parametrize("q", [2, 4, 6, 8])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lemma2(q, n):
    """Test {0, q/2}^n is closed under sums and differences."""
    report = verify("lemma2", {"q": q, "n": n})
    assert report.verdict is Verdict.PASS
    assert report.computed_value == Interval(0, 0)


def test_lemma2_rejects_odd_q():
    """Test the closure check needs even q."""
    with pytest.raises(DomainError):
        verify("lemma2", {"q": 5, "n": 2})


@pytest.mark.parametrize("seed", range(5))
def test_d_extension_random_codes(seed):
    """Test d(D) on seeded random codes."""
    report = verify("thm-D-extension", {"q": 4, "n": 3, "k": 2, "seed": seed})
    assert report.verdict is Verdict.PASS
    assert report.inputs == (("q", 4), ("n", 3), ("k", 2), ("seed", seed))


def test_cor_d_on_simplex():
    """Test the D-extension corollary on S_2 over Z_4."""
    report = verify("cor-D", {"q": 4, "k": 2})
    assert report.verdict is Verdict.PASS
    assert report.formula_value == 11


@pytest.mark.parametrize("v,expected", [(1, 2), (2, 3), (3, 2)])
def test_repetition_radius(v, expected):
    """Test repetition radii over Z_4 for every symbol."""
    report = verify("thm-repetition-radius", {"q": 4, "n": 3, "v": v})
    assert report.verdict is Verdict.PASS
    assert report.computed_value == Interval(expected, expected)
    assert report.evidence is Evidence.EXACT


def test_repetition_radius_flags_non_divisor():
    """Test v=4 over Z_6 is flagged: 4 does not divide 6, so M = 3."""
    report = verify("thm-repetition-radius", {"q": 6, "n": 2, "v": 4})
    assert report.verdict is Verdict.PASS
    assert report.computed_value == Interval(2, 2)
    assert "v=4 does not divide q=6: M = q/gcd(q, v) = 3" in report.notes


def test_repetition_radius_divisor_not_flagged():
    """Test v=2 over Z_4 carries no divisibility note."""
    report = verify("thm-repetition-radius", {"q": 4, "n": 2, "v": 2})
    assert not any("does not divide" in note for note in report.notes)


def test_full_repetition_radius():
    """Test the full repetition radius over Z_4."""
    report = verify("thm-full-repetition-radius", {"q": 4, "n": 2})
    assert report.verdict is Verdict.PASS
    assert report.formula_value == 5


def test_simplex_radius_bound_is_consistent_by_sampling():
    """Test the Simplex radius bound is consistent with sampling."""
    report = verify("thm-simplex-radius-bound", {"q": 4, "k": 2}, FAST)
    assert report.verdict is Verdict.PASS
    assert report.evidence is Evidence.SAMPLED
    assert report.formula_value == Fraction(33, 2)
    assert report.computed_value.lower <= 16
    assert report.computed_value.upper == 21
    assert "pass (consistent)" in str(report)


def test_macdonald_single_step_bound():
    """Test the single-step MacDonald bound with u = k."""
    report = verify("thm-macdonald-bound", {"q": 4, "k": 2, "u": 2}, FAST)
    assert report.verdict is Verdict.PASS
    assert report.formula_value == 13
    assert report.evidence is Evidence.SAMPLED
    assert report.inputs == (("q", 4), ("k", 2), ("u", 2), ("r", 2))


def test_macdonald_bound_falls_back_to_closed_form():
    """Test R(M_{4,2}) over Z_4 is checked against the base-free bound 67."""
    report = verify("thm-macdonald-bound", {"q": 4, "k": 3, "u": 2}, FAST)
    assert report.inputs[-1] == ("r", 3)
    assert report.verdict is Verdict.PASS
    assert report.evidence is Evidence.SAMPLED
    assert report.formula_value == 67
    assert report.computed_value.upper == 80
    assert "base-free closed form used" in report.notes


def test_macdonald_bound_base_out_of_budget():
    """Test a base M_{4,2} over Z_4 beyond the BFS budget is not computable."""
    report = verify("thm-macdonald-bound", {"q": 4, "k": 4, "u": 2, "r": 4})
    assert report.verdict is Verdict.NOT_COMPUTABLE
    assert report.formula_value is None
    assert "budget" in report.notes[0]


def test_out_of_budget_is_not_computable():
    """Test a budget overrun becomes a not-computable report."""
    report = verify("dual-perfect", {"q": 4, "k": 3})
    assert report.verdict is Verdict.NOT_COMPUTABLE
    assert report.computed_value is None
    assert "budget" in report.notes[0]


@pytest.mark.parametrize("seed", range(3))
def test_column_operation_checks(seed):
    """Test the append, puncture and direct-sum inequalities."""
    append = verify("prop-append-puncture", {"q": 4, "n": 3, "k": 1, "seed": seed})
    direct = verify("prop-direct-sum", {"q": 4, "n": 2, "m": 2, "seed": seed})
    assert append.verdict is Verdict.PASS
    assert direct.verdict is Verdict.PASS


def test_proposition_checks_logs_equality_counterexample():
    """Test appending a duplicate column leaves R unchanged."""
    # Appending a copy of the only column keeps R(C) = 1.
    outcome = proposition_checks(GeneratorMatrix.from_rows(2, [[1, 1]]), [[1]], [0])
    assert outcome.base == 1
    assert outcome.appended == 1
    assert outcome.append_holds
    assert not outcome.append_equality
    assert outcome.punctured == 0
    assert outcome.puncture_holds


# ---------------------------------------------------------------------------
# Parameters and suites
# ---------------------------------------------------------------------------


def test_unknown_theorem():
    """Test an unknown theorem id raises UnknownTheoremError."""
    with pytest.raises(UnknownTheoremError):
        verify("thm-unknown", {"q": 4})


def test_missing_parameter():
    """Test a missing required parameter raises DomainError."""
    with pytest.raises(DomainError):
        verify("thm-simplex-params", {"q": 4})


def test_unexpected_parameter():
    """Test an unknown parameter raises DomainError."""
    with pytest.raises(DomainError):
        verify("thm-simplex-params", {"q": 4, "k": 2, "u": 1})


def test_resolve_params_defaults():
    """Test defaults fill in, including r for the MacDonald bound."""
    assert resolve_params(TheoremId.MACDONALD_BOUND, {"q": 4, "k": 4, "u": 2}) == {
        "q": 4,
        "k": 4,
        "u": 2,
        "r": 3,
    }
    assert resolve_params(TheoremId.D_EXTENSION, {"q": 2, "n": 1})["seed"] == 0


def test_suite_params():
    """Test the suite grid sizes."""
    assert suite_params("thm-simplex-params", 4, kmax=3) == [
        {"q": 4, "k": 2},
        {"q": 4, "k": 3},
    ]
    assert len(suite_params("thm-repetition-radius", 4, nmax=5)) == 5 * 3
    assert len(suite_params("thm-macdonald-bound", 4, kmax=3)) == 3
    assert len(suite_params("thm-D-extension", 2, kmax=2, nmax=4)) == 4 * 2 * 5


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


@pytest.mark.asyncio
async def test_runner_suite_passes_and_fires_hooks():
    """Test a suite run fires on_report for every report."""
    seen = []

    async def record(report):
        seen.append(report)

    runner = VerificationRunner(hooks={"on_report": [record]}, workers=2)
    reports = await runner.run_suite("thm-simplex-params", 4, kmax=3)
    assert [r.inputs for r in reports] == [(("q", 4), ("k", 2)), (("q", 4), ("k", 3))]
    assert all(r.verdict is Verdict.PASS for r in reports)
    assert len(seen) == 2


@pytest.mark.asyncio
async def test_runner_merge_is_order_independent():
    """Test merged reports do not depend on job order or workers."""
    jobs = [
        ("thm-repetition-radius", {"q": 4, "n": n, "v": v})
        for n in (1, 2, 3)
        for v in (1, 2)
    ]
    forward = await VerificationRunner(workers=4).run(jobs)
    backward = await VerificationRunner(workers=1).run(list(reversed(jobs)))
    assert forward == backward
    assert [r.sort_key for r in forward] == sorted(r.sort_key for r in forward)


@pytest.mark.asyncio
async def test_runner_fires_on_fail(monkeypatch):
    """Test on_fail fires for a failing report."""
    failing = BoundReport(
        theorem_id=TheoremId.LEMMA1,
        inputs=(("q", 4), ("k", 2)),
        formula_value=Fraction(3),
        computed_value=Interval(2, 2),
        verdict=Verdict.FAIL,
    )
    monkeypatch.setattr(verifier, "verify", lambda *args: failing)
    failures = []

    async def on_fail(report):
        failures.append(report)

    runner = VerificationRunner(hooks={"on_fail": [on_fail]})
    reports = await runner.run([("lemma1", {"q": 4, "k": 2})])
    assert reports == [failing]
    assert failures == [failing]


@pytest.mark.asyncio
async def test_runner_propagates_domain_errors():
    """Test domain errors surface from a suite run."""
    runner = VerificationRunner()
    with pytest.raises(DomainError):
        await runner.run_suite("lemma2", 5, nmax=2)
