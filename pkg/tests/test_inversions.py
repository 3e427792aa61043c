import pytest

from runcube import inversions as inv
from runcube import poset, strings
from runcube.errors import ResourceLimitError


def test_printed_tables():
    for n, terms in inv.PRINTED_Q.items():
        assert inv.q_polynomial(n) == inv.XQ.poly(terms)


def test_statistic_is_zeros_before_ones():
    # the other convention (ones before zeros) already disagrees at n = 4:
    # it would give 1 + q^2 x + q^3 x instead of the printed 1 + x + q x
    classic = {}
    for w in strings.enumerate_rc(4):
        invs = sum(
            1
            for i in range(4)
            for j in range(i + 1, 4)
            if w[i] == "1" and w[j] == "0"
        )
        key = (w.count("1"), invs)
        classic[key] = classic.get(key, 0) + 1
    assert inv.XQ.poly(classic) != inv.XQ.poly(inv.PRINTED_Q[4])
    assert inv.q_polynomial(4) == inv.XQ.poly(inv.PRINTED_Q[4])


def test_enumeration_matches_string_statistic():
    for n in range(0, 12):
        brute = inv.XQ.zero()
        for w in strings.enumerate_rc(n) if n else [""]:
            brute = brute + inv.XQ.monomial(
                1, x=w.count("1"), q=strings.inversions(w)
            )
        assert inv.q_polynomial(n) == brute


def test_recurrence_matches_enumeration():
    rep = inv.recurrence_check(n_max=20)
    assert rep.ok, "\n".join(rep.failures)


def test_functional_identity():
    rep = inv.functional_identity_check(order=20)
    assert rep.ok, "\n".join(rep.failures)


def test_q1_specialization():
    rep = inv.q1_specialization_check(order=20)
    assert rep.ok, "\n".join(rep.failures)


def test_q1_counts_by_weight():
    # at q = 1 the coefficient of x^k counts strings with k ones
    for n in range(1, 16):
        poly = inv.q_polynomial_recursive(n).evaluate_at("q", 1)
        for k in range(n + 1):
            want = strings.count_by_weight(n, k)
            assert poly.coefficient("x", k).constant_term() == want


def test_x_degree_is_maximum_weight():
    for n in range(3, 26):
        degree = inv.q_polynomial_recursive(n).degree("x")
        support = max(k for k in range(n + 1) if strings.count_by_weight(n, k) > 0)
        assert degree == support


def test_q_at_shifted_index_is_rank_polynomial():
    x = poset.X_RING.var("x")
    for n in range(0, 12):
        collapsed = inv.q_polynomial_recursive(n + 2).map_onto(
            poset.X_RING, {"x": x, "q": 1}
        )
        assert collapsed == poset.rank_polynomial(n)


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        inv.q_polynomial(40, cap=1000)
