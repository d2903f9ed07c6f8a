from fractions import Fraction as F

import pytest

import erdosmat as em


def test_verdicts():
    r = [["3/5", "2/5", 0], ["2/5", "1/5", "2/5"], [0, "2/5", "3/5"]]
    v = em.is_erdos(r)
    assert v["erdos"] and v["frob_sq"] == F(7, 5)
    assert em.delta(em.max_delta_matrix(4)) == F(3, 4)
    value, witnesses = em.maxtr([[1, 5], [4, 2]], method="brute")
    assert value == 9 and witnesses == [[2, 1]]


def test_errors_map_to_exceptions():
    with pytest.raises(em.NotBistochasticError):
        em.frob_sq([[1, 0], [1, 0]])
    with pytest.raises(em.Error):
        em.parse_matrix("1 x")
    with pytest.raises(em.DependentSetError):
        em.solve_candidate([[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 2, 1], [2, 3, 1], [3, 1, 2]])


def test_decompose_and_canon():
    s = [[F(1, 2), F(1, 2), 0], [F(1, 4), F(1, 4), F(1, 2)], [F(1, 4), F(1, 4), F(1, 2)]]
    terms = em.decompose(s, reduce="linear")
    assert sum(c for c, _ in terms) == 1
    assert em.canonical_form(s) == em.canonical_form([row[::-1] for row in s[::-1]])


def test_gram_example():
    perms = [[1, 2, 3, 4], [2, 1, 3, 4], [1, 3, 2, 4], [1, 2, 4, 3]]
    assert em.build_gram(perms) == [[4, 2, 2, 2], [2, 4, 1, 0], [2, 1, 4, 1], [2, 0, 1, 4]]
    out = em.pipeline(perms)
    assert not out["accepted"] and out["rejection"] == "negative_weight"
    x, value = em.solve_candidate([[1, 2, 3], [2, 1, 3], [1, 3, 2]])
    assert x == [F(1, 5), F(2, 5), F(2, 5)] and value == F(7, 5)


def test_enumerate_and_families():
    rep = em.enumerate(3, workers=2)
    assert rep["complete"] and len(rep["classes"]) == 6
    assert [len(em.half_identity_family(n)) for n in range(2, 7)] == [2, 3, 5, 7, 11]
    assert em.count_bound(3) == (62, 31)


def test_surds():
    ps = em.omega2(F(3, 16))
    assert [p.a for p in ps] == [F(1, 8), F(3, 8), F(5, 8), F(7, 8)]
    for p in em.omega2("1/5"):
        assert em.delta2_of_p(p) == em.Surd(F(1, 5))
        assert 0 <= float(p) <= 1
