import pytest

from qexterior.closed_forms import CaseLabel
from qexterior.suite import (asymmetry_pair, auslander_table, complex_degree, corrupted_d_matrix,
                             hh0_table, iv_pattern_table, labels_covered, reachable_labels,
                             sample_suite, verify_automorphism, verify_suite)


def test_samples_within_range_and_cover_labels():
    for p in (0, 2):
        for a, b in sample_suite(p):
            for text in (a, b):
                if text != "generic":
                    assert -3 <= int(text.split("^")[1]) <= 3
    assert len(reachable_labels(0)) == len(CaseLabel) == 10
    assert CaseLabel.ALPHA_SIGMA_III.value not in reachable_labels(2)


@pytest.mark.parametrize("p", [0, 2])
def test_default_suite_passes(p):
    results = verify_suite(p)
    assert all(r.ok for r in results), [str(r.counterexample()) for r in results if not r.ok]
    assert labels_covered(results) == reachable_labels(p)
    assert all(all(r.checks.values()) for r in results)


def test_complex_degree():
    assert complex_degree("q^-3", "q^3", 0) == 12
    assert complex_degree("q^-3", "q^12", 0) == 19
    assert complex_degree("generic", "q^1", 0) == 12


def test_negative_control_fails_at_first_odd_differential():
    results = verify_suite(0, oracle_degree=1, d_matrix_fn=corrupted_d_matrix)
    failing = [r for r in results if not r.ok]
    assert failing
    worst = min((r.counterexample() for r in failing), key=lambda m: (m.n, m.differential))
    assert worst.differential == 1
    assert "d_1" in str(worst) and worst.alpha and worst.beta
    # it is the sign that breaks d d = 0 as well
    r = verify_automorphism("q^-1", "generic", 0, 6, 0, d_matrix_fn=corrupted_d_matrix)
    assert not r.checks["dd_zero"]


def test_tables():
    for p in (0, 2):
        assert all(row["dim_ker_d1"] == row["expected"] == row["closed_form"] for row in hh0_table(p))
    assert [row["dim_ker_d1"] for row in hh0_table(0)] == [3, 2, 2, 2, 1]
    for row in auslander_table(3):
        t = row["t"]
        assert row["nonzero_degrees"] == [2 * t, 2 * t + 1, 2 * t + 2]
        assert row["last_nonzero"] == 2 * t + 2
        assert [row["hh"][n] for n in row["nonzero_degrees"]] == [1, 2, 1]
    pair = asymmetry_pair(0)
    assert pair["forward"]["hh"][1:] == [0] * 10 and pair["inverse"]["hh"][1:] == [1] * 10
    assert asymmetry_pair(2)["inverse"]["hh"][1:] == [2] * 10
    for p in (0, 2):
        for row in iv_pattern_table(p, 2):
            start = row["start"]
            expect = [n for n in (start, start + 1, start + 2) if n >= 1]
            assert row["nonzero_degrees"] == expect
