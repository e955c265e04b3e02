import itertools

import pytest

from coxshell.checks import (
    cover_criterion_counterexamples,
    reflection_corollary_counterexamples,
    reflection_formula_counterexamples,
    weak_pairs,
)
from coxshell.coxeter import new_system, weak_leq
from coxshell.errors import NonTerminating, NotComparable, SystemMismatch
from coxshell.interval import (
    check_cover_criterion,
    check_reflection_formula,
    coxeter_facet,
    enumerate_interval,
    interval_descent_set,
    reflection_formula_sides,
)
from oracles import hyperoctahedral_group, symmetric_group


def words(system, *texts):
    return {system.parse_word(t) for t in texts}


def test_singleton_interval(B4):
    w = B4.parse_word("s2s3s2")
    iv = enumerate_interval(w, w)
    assert list(iv) == [w]
    assert iv.covers == ()


def test_a3_example_interval(A3):
    u, w0 = A3.parse_word("s1s2"), A3.longest()
    iv = enumerate_interval(u, w0)
    assert set(iv) == words(
        A3, "s1s2", "s1s2s3", "s1s2s1", "s1s2s1s3", "s1s2s3s2", "s1s2s3s1s2", "s1s2s3s2s1", "s1s2s3s1s2s1")
    assert len(iv) == 8
    assert len(iv.covers) == 9
    assert iv.elements[0] == u and iv.elements[-1] == w0
    for i, j, s in iv.covers:
        assert iv.elements[i].mul_gen(s) == iv.elements[j]
        assert iv.elements[j].length == iv.elements[i].length + 1


def test_infinite_dihedral_interval():
    g = new_system([[1, 0], [0, 1]])
    iv = enumerate_interval(g.identity, g.element([0, 1, 0, 1]))
    assert [w.word for w in iv] == [(), (0,), (0, 1), (0, 1, 0), (0, 1, 0, 1)]


def test_interval_cap():
    g = new_system([[1, 0], [0, 1]])
    with pytest.raises(NonTerminating):
        enumerate_interval(g.identity, g.element([0, 1] * 10), cap=5)


def test_not_comparable(A3):
    with pytest.raises(NotComparable):
        enumerate_interval(A3.parse_word("s2s1"), A3.parse_word("s1s2"))
    with pytest.raises(NotComparable):
        interval_descent_set(A3.parse_word("s2"), A3.parse_word("s1"))
    with pytest.raises(NotComparable):
        check_reflection_formula(A3.parse_word("s2"), A3.parse_word("s1"))


def test_system_mismatch(A3):
    with pytest.raises(SystemMismatch):
        enumerate_interval(A3.identity, new_system("A3").identity)
    with pytest.raises(SystemMismatch):
        check_cover_criterion(A3.identity, new_system("A3").identity)


@pytest.mark.parametrize("name,order", [("A2", 6), ("A3", 24), ("B3", 48)])
def test_whole_group_interval(name, order):
    g = new_system(name)
    assert len(enumerate_interval(g.identity, g.longest())) == order


def test_descent_sets(A3, B4):
    w = A3.parse_word("s1s3")
    assert interval_descent_set(w, w) == frozenset()
    assert interval_descent_set(A3.parse_word("s1s2"), A3.longest()) == {0, 1}
    u = B4.parse_word("s2s3s2")
    v = B4.parse_word("s2s3s2s1s0s2s3")
    assert interval_descent_set(u, v) == {0, 3}


def test_reflection_formula_trivial(B4):
    v = B4.parse_word("s2s3s2s1s0s2s3")
    lhs, rhs = reflection_formula_sides(v, v)
    assert lhs == rhs == v.left_inversion_roots()


def test_reflection_formula_b4_example(B4):
    u = B4.parse_word("s2s3s2")
    v = B4.parse_word("s2s3s2s1s0s2s3")
    lhs, rhs = reflection_formula_sides(u, v)
    assert len(lhs) == 7
    assert lhs == rhs
    assert check_reflection_formula(u, v) == (True, None)


def test_weak_pair_count_against_oracle(A3):
    oracle = symmetric_group(4)
    expected = sum(1 for x in oracle.elements for y in oracle.elements if oracle.weak_leq(x, y))
    assert expected == 151
    pairs = weak_pairs(A3.elements())
    assert len(pairs) == expected
    assert reflection_formula_counterexamples(pairs) == []


def test_reflection_formula_b3(B3):
    oracle = hyperoctahedral_group(3)
    expected = sum(1 for x in oracle.elements for y in oracle.elements if oracle.weak_leq(x, y))
    pairs = weak_pairs(B3.elements())
    assert len(pairs) == expected
    assert reflection_formula_counterexamples(pairs) == []


def test_cover_criterion_examples(A3):
    u = A3.parse_word("s1s2")
    assert check_cover_criterion(u, u)
    assert len(coxeter_facet(u) & coxeter_facet(u)) == 3
    v = A3.parse_word("s1s2s3")
    assert len(coxeter_facet(u) & coxeter_facet(v)) == 2
    assert check_cover_criterion(u, v)


def test_cover_criterion_exhaustive(A3, B3):
    assert cover_criterion_counterexamples(A3.elements()) == []
    assert cover_criterion_counterexamples(B3.elements()) == []


def test_reflection_corollary(A3):
    assert reflection_corollary_counterexamples(A3.elements()) == []


def test_graded_connectivity(A3, B3):
    for system in (A3, B3):
        elements = system.elements()
        for u, v in itertools.product(elements, repeat=2):
            if not weak_leq(u, v):
                continue
            iv = enumerate_interval(u, v)
            reach_up = {0}
            for i, j, _ in iv.covers:  # covers are sorted by source index, sources by length
                if i in reach_up:
                    reach_up.add(j)
            top = iv.position(v)
            reach_down = {top}
            for i, j, _ in sorted(iv.covers, key=lambda c: -c[1]):
                if j in reach_down:
                    reach_down.add(i)
            assert reach_up == reach_down == set(range(len(iv)))
