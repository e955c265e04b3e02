import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxshell.complex import (
    FinitePoset,
    IntPolynomial,
    PureComplex,
    all_extensions_shelling,
    bruhat_poset,
    check_order,
    count_linear_extensions,
    decide_linear_shellability,
    f_polynomial,
    find_shelling_order,
    format_facets,
    gale_leq,
    h_polynomial,
    is_shelling,
    is_strong_shelling,
    lex_order,
    linear_extensions,
    parse_facets,
    relabel,
    restriction_sizes,
    revlex_order,
    tail_swap,
)
from coxshell.errors import (
    InvalidComplex,
    NotBijective,
    PreconditionFailed,
    SizeMismatch,
    TooLarge,
    TooMany,
)
from hasse_fixtures import HACHIMORI_DRAWN, NOT_LINEAR, cover_labels
from generators import grown_complex, uniform_complex
from oracles import count_extensions_by_ideals, faces_by_brute_force

# the hostile vertex names of the earlier source are turned into ours by this permutation
TO_NICE_NAMES = (6, 4, 5, 7, 3, 1, 2)


def inverse_perm(p):
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[x - 1] = i
    return tuple(out)


def ksubsets(n, k):
    return list(itertools.combinations(range(1, n + 1), k))


# -- Gale order ----------------------------------------------------------------


def test_gale_examples():
    assert gale_leq((1, 3, 5), (1, 3, 5))
    assert gale_leq((1, 3, 5, 7), (1, 4, 6, 8))
    assert not gale_leq((1, 4, 6, 7), (2, 3, 7, 8))
    with pytest.raises(SizeMismatch):
        gale_leq((1, 2), (1, 2, 3))


facets4 = st.lists(st.integers(1, 9), min_size=3, max_size=3, unique=True).map(lambda xs: tuple(sorted(xs)))


@given(facets4, facets4, facets4)
@settings(max_examples=300)
def test_gale_partial_order(x, y, z):
    assert gale_leq(x, x)
    if gale_leq(x, y) and gale_leq(y, x):
        assert x == y
    if gale_leq(x, y) and gale_leq(y, z):
        assert gale_leq(x, z)


# -- shelling checks ---------------------------------------------------------------


def test_singletons():
    assert is_shelling([(1, 2, 3)])
    assert is_strong_shelling([(1, 2, 3)])


def test_hachimori_lex(hachimori):
    assert is_shelling(lex_order(hachimori.facets))


def test_not_linear_lex(not_linear):
    verdict = is_shelling(lex_order(not_linear.facets))
    assert not verdict
    i, j = verdict.witness
    assert 0 <= i < j < len(not_linear)


def test_witness_is_first_failure():
    # 12 and 34 share nothing, so the pair (0, 1) fails at once
    assert is_shelling([(1, 2), (3, 4)]) == (False, (0, 1))
    assert is_shelling([(1, 2), (2, 3), (3, 4)]).ok


def test_uniform_matroid_revlex():
    for n, k in ((4, 2), (5, 3)):
        assert is_strong_shelling(revlex_order(ksubsets(n, k)))


def test_strong_stricter_than_plain():
    # 35 meets the earlier facets only along 3 (via 13); the swapped-in 1 is not in 24
    seq = [(1, 2), (1, 3), (2, 4), (3, 5)]
    assert is_shelling(seq)
    assert is_strong_shelling(seq) == (False, (2, 3))


def test_check_order_modes():
    seq = [(1, 2), (2, 3)]
    assert check_order(seq, "shelling") and check_order(seq, "strong")
    with pytest.raises(ValueError):
        check_order(seq, "weird")


def test_strong_implies_plain():
    rng = random.Random(11)
    for _ in range(300):
        seq = uniform_complex(rng, 6, 3, rng.randint(2, 7))
        rng.shuffle(seq)
        if is_strong_shelling(seq):
            assert is_shelling(seq)


# -- tail swap ----------------------------------------------------------------------


def test_tail_swap_hachimori_prefixes(hachimori):
    lex = lex_order(hachimori.facets)
    swapped = 0
    for m in range(3, len(lex) + 1):
        prefix = lex[:m]
        if len(set(prefix[-1]) & set(prefix[-2])) < 2:
            out = tail_swap(prefix)
            assert out[-1] == prefix[-2] and out[-2] == prefix[-1]
            assert is_shelling(out)
            swapped += 1
    assert swapped > 0


def test_tail_swap_rejects_ridge_neighbours():
    rev = revlex_order(ksubsets(4, 2))
    assert rev[-2:] == [(2, 4), (3, 4)]
    with pytest.raises(PreconditionFailed):
        tail_swap(rev, strong=True)


def test_tail_swap_needs_shelling_input():
    with pytest.raises(PreconditionFailed):
        tail_swap([(1, 2, 3), (4, 5, 6), (1, 2, 4), (3, 5, 6)])
    with pytest.raises(PreconditionFailed):
        tail_swap([(1, 2), (2, 3)])


def test_tail_swap_strong():
    rev = revlex_order(ksubsets(5, 3))
    for m in range(3, len(rev) + 1):
        prefix = rev[:m]
        if len(set(prefix[-1]) & set(prefix[-2])) < 2:
            assert is_strong_shelling(tail_swap(prefix, strong=True))


# -- posets and linear extensions -------------------------------------------------------


def test_bruhat_poset_antichain():
    p = bruhat_poset(PureComplex.from_facets([(1, 4), (2, 3)]))
    assert p.size == 2 and p.covers == ()


def test_hachimori_hasse(hachimori):
    mine = cover_labels(bruhat_poset(hachimori))
    assert len(mine) == 19
    assert HACHIMORI_DRAWN < mine
    assert mine - HACHIMORI_DRAWN == {frozenset({"126", "146"})}


def test_not_linear_hasse(not_linear):
    assert cover_labels(bruhat_poset(not_linear)) == NOT_LINEAR


def test_chain_and_antichain():
    chain = FinitePoset(4, [(0, 1), (1, 2), (2, 3)])
    assert linear_extensions(chain) == [(0, 1, 2, 3)]
    anti = FinitePoset(2, [])
    assert linear_extensions(anti) == [(0, 1), (1, 0)]


def test_poset_validation():
    with pytest.raises(InvalidComplex):
        FinitePoset(2, [(0, 1), (1, 0)])
    with pytest.raises(InvalidComplex):
        FinitePoset(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(InvalidComplex):
        FinitePoset(2, [(0, 5)])


def test_extension_counts_against_ideal_oracle(hachimori, not_linear):
    for x in (hachimori, not_linear):
        p = bruhat_poset(x)
        less = {(a, b) for a in range(p.size) for b in range(p.size) if p.less(a, b)}
        assert count_linear_extensions(p) == count_extensions_by_ideals(p.size, less)
    p = bruhat_poset(hachimori)
    exts = linear_extensions(p)
    assert len(exts) == count_linear_extensions(p) == 222
    assert all(p.is_linear_extension(e) for e in exts)
    assert len(set(exts)) == len(exts)


def test_extension_cap(not_linear):
    with pytest.raises(TooMany):
        linear_extensions(bruhat_poset(not_linear), cap=1000)


def test_all_extensions_shelling(hachimori, not_linear):
    assert all_extensions_shelling(hachimori, exhaustive=True)
    p = bruhat_poset(hachimori)
    for ext in linear_extensions(p):
        assert is_shelling([hachimori.facets[i] for i in ext])
    assert not all_extensions_shelling(not_linear)
    assert all_extensions_shelling(PureComplex.from_facets([(1, 2, 3)]), exhaustive=True)


def test_lex_verdict_matches_every_extension():
    rng = random.Random(2024)
    seen = {True: 0, False: 0}
    for trial in range(60):
        make = grown_complex if trial % 2 else uniform_complex
        facets = make(rng, 7, 3, rng.randint(3, 8))
        x = PureComplex.from_facets(facets)
        if count_linear_extensions(bruhat_poset(x)) > 10**4:
            continue
        for mode in ("shelling", "strong"):
            seen[all_extensions_shelling(x, mode, exhaustive=True)] += 1
    assert seen[True] and seen[False]


# -- labeling search ---------------------------------------------------------------


def test_not_linearly_shellable(not_linear):
    assert decide_linear_shellability(not_linear) is None
    order = find_shelling_order(not_linear)
    assert order is not None and is_shelling(order)
    assert sorted(order) == sorted(not_linear.facets)


def test_hostile_names(hachimori):
    hostile = relabel(hachimori, inverse_perm(TO_NICE_NAMES))
    assert not is_shelling(lex_order(hostile.facets))
    assert relabel(hostile, TO_NICE_NAMES) == hachimori
    witness = decide_linear_shellability(hostile)
    assert witness is not None
    labels = tuple(witness[v] for v in range(1, 8))
    assert is_shelling(lex_order(relabel(hostile, labels).facets))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, n + 1)])
def test_complete_complex_identity_labeling(n, k):
    x = PureComplex.from_facets(ksubsets(n, k))
    assert is_shelling(lex_order(x.facets))
    assert decide_linear_shellability(x) == {v: v for v in range(1, n + 1)}


def test_labeling_independence(hachimori):
    rng = random.Random(5)
    for _ in range(3):
        perm = list(range(1, 8))
        rng.shuffle(perm)
        assert decide_linear_shellability(relabel(hachimori, perm)) is not None
    for _ in range(5):
        x = PureComplex.from_facets(uniform_complex(rng, 6, 3, 6))
        perm = list(range(1, x.n + 1))
        rng.shuffle(perm)
        for mode in ("shelling", "strong"):
            a = decide_linear_shellability(x, mode)
            b = decide_linear_shellability(relabel(x, perm), mode)
            assert (a is None) == (b is None)


def test_labeling_independence_not_linear(not_linear):
    perm = (3, 8, 1, 6, 2, 7, 5, 4)
    assert decide_linear_shellability(relabel(not_linear, perm)) is None


def test_parallel_search_agrees(hachimori):
    hostile = relabel(hachimori, inverse_perm(TO_NICE_NAMES))
    assert decide_linear_shellability(hostile, workers=2) == decide_linear_shellability(hostile)


def test_labeling_cap():
    x = PureComplex.from_facets([tuple(range(1, 11))])
    with pytest.raises(TooLarge):
        decide_linear_shellability(x)


def test_relabel():
    x = PureComplex.from_facets([(1, 2, 3)])
    assert relabel(x, (1, 2, 3)) == x
    assert relabel(x, (3, 2, 1)) == x
    with pytest.raises(NotBijective):
        relabel(x, (1, 1, 2))


# -- face numbers ---------------------------------------------------------------------


def test_single_facet_f():
    for k in range(1, 6):
        x = PureComplex.from_facets([tuple(range(1, k + 1))])
        assert f_polynomial(x) == [1] + [len(list(itertools.combinations(range(k), r))) for r in range(1, k + 1)]
        assert h_polynomial(x) == [1]


def test_triangle_boundary():
    x = PureComplex.from_facets([(1, 2), (1, 3), (2, 3)])
    assert f_polynomial(x) == faces_by_brute_force(x.facets) == [1, 3, 3]
    assert h_polynomial(x) == [1, 1, 1]


def test_faces_against_brute_force(hachimori, not_linear):
    for x in (hachimori, not_linear):
        assert f_polynomial(x) == faces_by_brute_force(x.facets)
    rng = random.Random(3)
    for _ in range(30):
        facets = uniform_complex(rng, 7, 3, rng.randint(1, 9))
        assert f_polynomial(PureComplex.from_facets(facets)) == faces_by_brute_force(facets)


def test_h_matches_restrictions_along_shellings():
    rng = random.Random(17)
    checked = 0
    for trial in range(150):
        make = grown_complex if trial % 2 else uniform_complex
        x = PureComplex.from_facets(make(rng, 7, 3, rng.randint(2, 9)))
        lex = lex_order(x.facets)
        if not is_shelling(lex):
            continue
        h = h_polynomial(x)
        assert all(c >= 0 for c in h.coeffs)
        sizes = restriction_sizes(lex)
        assert h == [sizes.count(i) for i in range(x.k + 1)]
        checked += 1
    assert checked > 20


def test_polynomial_display():
    assert str(IntPolynomial([1, 5, 2])) == "1+5q+2q^2"
    assert str(IntPolynomial([1, 8, 15, 8])) == "1+8q+15q^2+8q^3"
    assert str(IntPolynomial([1, -1, 0, 0])) == "1-q"
    assert str(IntPolynomial([])) == "0"
    assert IntPolynomial([1, 3, 3])(-1) == 1


# -- facet files --------------------------------------------------------------------------


def test_parse_facets_format():
    text = "# a comment\n1 2 3\n\n2 3 4  # trailing\n1 3 4"
    assert parse_facets(text) == [(1, 2, 3), (2, 3, 4), (1, 3, 4)]
    assert parse_facets(text + "\n") == parse_facets(text)


@pytest.mark.parametrize("bad", ["1 2 x", "3 2 1", "0 1 2", "1 1 2"])
def test_parse_facets_errors(bad):
    with pytest.raises(InvalidComplex, match="line 2"):
        parse_facets("1 2 3\n" + bad)


def test_format_roundtrip(not_linear):
    assert parse_facets(format_facets(not_linear.facets)) == list(not_linear.facets)


def test_complex_validation():
    with pytest.raises(InvalidComplex):
        PureComplex.from_facets([])
    with pytest.raises(InvalidComplex):
        PureComplex.from_facets([(1, 2), (1, 2, 3)])
    with pytest.raises(InvalidComplex):
        PureComplex.from_facets([(1, 5)], n=4)
    x = PureComplex.from_facets([(2, 3), (1, 2), (1, 2)])
    assert x.facets == ((1, 2), (2, 3)) and x.n == 3 and x.dim == 1
