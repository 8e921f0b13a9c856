from collections import Counter

import pytest
from hypothesis import given, strategies as st

from dp2delta.lattice import ANTI_K, K, enumerate_line_classes, enumerate_roots, intersect, reflect

from support import brute_force_classes


@pytest.fixture(scope="module")
def oracle_roots():
    return brute_force_classes(-2, 0, 5)


@pytest.fixture(scope="module")
def oracle_lines():
    return brute_force_classes(-1, -1, 5)


def test_canonical_square():
    assert intersect(K, K) == 2
    assert intersect(ANTI_K, ANTI_K) == 2


def test_root_count_matchesbrute_force_classes(oracle_roots):
    assert len(oracle_roots) == 126
    assert list(enumerate_roots()) == oracle_roots


def test_line_count_matchesbrute_force_classes(oracle_lines):
    assert len(oracle_lines) == 56
    assert list(enumerate_line_classes()) == oracle_lines


def test_line_pairings():
    # each line l has one partner -K - l with l.l' = 2; the rest split 27/27
    lines = enumerate_line_classes()
    for a in lines:
        c = Counter(intersect(a, b) for b in lines)
        assert c == {-1: 1, 0: 27, 1: 27, 2: 1}
        partner = tuple(-x - y for x, y in zip(K, a))
        assert partner in lines


def test_root_line_products():
    # a fixed root meets 12 line classes positively, 12 negatively
    lines = enumerate_line_classes()
    for r in enumerate_roots():
        c = Counter(intersect(r, ell) for ell in lines)
        assert c == {0: 32, 1: 12, -1: 12}


def test_reflections_permute_roots_and_lines():
    roots = set(enumerate_roots())
    lines = set(enumerate_line_classes())
    for r in list(roots)[::9]:
        assert {reflect(r, x) for x in roots} == roots
        assert {reflect(r, x) for x in lines} == lines


vectors = st.tuples(*[st.integers(-20, 20)] * 8)


@given(vectors, vectors, st.sampled_from(enumerate_roots()))
def test_reflection_is_isometric_involution(a, b, r):
    ra, rb = reflect(r, a), reflect(r, b)
    assert intersect(ra, rb) == intersect(a, b)
    assert reflect(r, ra) == a
    assert intersect(reflect(r, K), K) == 2
    assert reflect(r, K) == K


@given(vectors, vectors)
def test_form_is_symmetric_bilinear(a, b):
    s = tuple(x + y for x, y in zip(a, b))
    assert intersect(a, b) == intersect(b, a)
    assert intersect(s, s) == intersect(a, a) + 2 * intersect(a, b) + intersect(b, b)


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        intersect((1, 0), (1, 0, 0))

