import pytest

from goldens import POSET_PAIRS, POSET_VIOLATIONS
from runcube import graph, poset, strings
from runcube.errors import ValidationError


def test_rank_polynomial_formula_vs_census():
    for n in range(1, 13):
        poly = poset.rank_polynomial(n)
        census = {}
        for word in strings.enumerate_rc(n + 2):
            census[word.count("1")] = census.get(word.count("1"), 0) + 1
        want = poset.X_RING.poly({(k,): c for k, c in census.items()})
        assert poly == want


def test_rank_polynomial_at_one_counts_vertices():
    for n in range(1, 26):
        assert poset.rank_polynomial(n).evaluate({"x": 1}) == strings.fibonacci(n + 2)


def test_printed_rank_polynomials():
    assert poset.rank_polynomial(1).render() == "1 + x"
    assert poset.rank_polynomial(2).render() == "1 + 2*x"
    assert poset.rank_polynomial(3).render() == "1 + 3*x + x^2"
    assert poset.rank_polynomial(4).render() == "1 + 4*x + 3*x^2"


def test_leq_is_reachability_not_containment():
    # containment holds but no chain of valid flips connects these
    assert poset.leq(7, "1001000", "1111000") is False
    assert poset.leq(8, "01001000", "01111000") is False
    assert poset.leq(8, "10010000", "11110000") is False
    # whereas ordinary comparabilities remain
    assert poset.leq(7, "0000000", "1111000") is True
    assert poset.leq(5, "00100", "11100") is True


def test_leq_rejects_non_vertices():
    with pytest.raises(ValidationError):
        poset.leq(4, "0011", "0011")
    with pytest.raises(ValidationError):
        poset.leq(4, "000", "0000")


def test_minimal_interval_counterexample():
    # the smallest non-Boolean interval: a 3-chain where a 4-cycle should be
    assert poset.interval(5, "00100", "11100") == ["00100", "01100", "11100"]
    assert poset.mobius(5, "00100", "11100") == 1
    assert poset.mobius_recursive(5, "00100", "11100") == 0
    # the full-box variant one level up: 7 elements instead of 8
    box = poset.interval(5, "00000", "11100")
    assert len(box) == 7
    assert "10100" not in box  # 1010000 breaks the run condition
    assert poset.mobius_recursive(5, "00000", "11100") == 0
    assert poset.mobius(5, "00000", "11100") == -1


def test_interval_that_is_a_genuine_cube():
    members = poset.interval(6, "000000", "110001")
    assert len(members) == 8
    g = graph.build(6)
    dist = graph.bfs_distances(g, "000000")
    assert int(dist[g.index_of("110001")]) == 3
    assert poset.mobius_recursive(6, "000000", "110001") == -1
    assert poset.mobius(6, "000000", "110001") == -1


def test_boolean_interval_survey_frozen_counts():
    for n in range(1, 9):
        survey = poset.verify_boolean_intervals(n)
        assert survey["pairs_checked"] == POSET_PAIRS[n]
        assert len(survey["violations"]) == POSET_VIOLATIONS[n]


def test_survey_violation_records_are_descriptive():
    survey = poset.verify_boolean_intervals(5)
    first = survey["violations"][0]
    assert first["bottom"] == "00100"
    assert first["top"] == "11100"
    assert first["expected_size"] == 4
    assert first["actual_size"] == 3
    assert first["first_missing"] == "10100"


def test_mobius_agreement_below_five():
    for n in range(1, 5):
        for a, b in poset._comparable_pairs(n):
            got = poset.mobius_recursive(n, a >> 2, b >> 2)
            assert got == poset.mobius(n, a >> 2, b >> 2)


def test_mobius_mismatch_counts_from_five():
    for n, want in ((5, 3), (6, 6), (7, 16), (8, 38)):
        mismatches = 0
        for a, b in poset._comparable_pairs(n):
            if poset.mobius_recursive(n, a >> 2, b >> 2) != poset.mobius(
                n, a >> 2, b >> 2
            ):
                mismatches += 1
        assert mismatches == want


def test_maximal_tables_verbatim():
    for n, table in poset.MAXIMAL_TABLES.items():
        got = [label + "00" for label in graph.maximal_vertices(n)]
        assert got == sorted(table)


def test_rank_and_maximal_reports():
    assert poset.rank_check(n_max=10).ok
    assert poset.maximal_gf_check(order=24, brute_max=14).ok


def test_interval_and_mobius_reports_fail_honestly():
    rep = poset.interval_check(n_max=6)
    assert not rep.ok
    assert any("R_5" in line for line in rep.failures)
    rep = poset.mobius_check(n_max=6)
    assert not rep.ok
    assert any("00100" in line for line in rep.failures)
