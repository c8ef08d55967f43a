import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cpext import corpus
from cpext.congruence import (Congruence, all_congruences, cover_class_representatives, generate,
                              generate_worklist, is_congruence, join, meet, principal_congruence,
                              restrict)
from cpext.errors import SizeLimitExceeded
from cpext.suite import congruences_by_partition_filter, set_partitions
from cpext.triples import build_m3hat


def test_set_partition_counts():
    # Bell numbers
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_canonical_form():
    t = Congruence.from_labels([7, 7, 3, 3, 9])
    assert t.ids == (0, 0, 2, 2, 4)
    assert str(t) == "{0,1|2,3|4}"
    assert t == Congruence.from_blocks(5, [[0, 1], [2, 3]])
    assert t.num_blocks() == 3 and t.related(2, 3) and not t.related(1, 2)


@pytest.mark.parametrize("name, count", [("C2", 2), ("C3", 4), ("M3", 2), ("N5", 5), ("B2", 4),
                                         ("B3", 8), ("C4", 8)])
def test_congruence_counts(name, count):
    assert len(all_congruences(corpus.named(name))) == count


def test_matches_partition_filter_up_to_six():
    for n in range(1, 7):
        for L in corpus.enumerate_lattices(n):
            assert set(all_congruences(L)) == congruences_by_partition_filter(L)


def test_matches_partition_filter_on_small_triple_lattices():
    for name in ("C2", "M3"):
        T = build_m3hat(corpus.named(name))
        if T.lattice.n <= 9:
            assert set(all_congruences(T.lattice)) == congruences_by_partition_filter(T.lattice)


def test_principal_examples(M3, N5, C3):
    assert principal_congruence(M3, 0, 1) == Congruence.total(5)
    assert principal_congruence(C3, 0, 1).blocks() == [[0, 1], [2]]
    assert principal_congruence(C3, 1, 1) == Congruence.identity(3)
    # collapsing the short side of N5 (0 < a) forces b ~ 1 and c ~ 1
    t = principal_congruence(N5, 0, 1)
    assert t.blocks() == [[0, 1], [2, 3, 4]]
    # collapsing b < c leaves the rest alone
    assert principal_congruence(N5, 2, 3).blocks() == [[0], [1], [2, 3], [4]]


def test_principal_is_least(small_lattices):
    for name, L in small_lattices:
        if L.n > 6:
            continue
        cons = all_congruences(L)
        for a in range(L.n):
            for b in range(a + 1, L.n):
                p = principal_congruence(L, a, b)
                assert p in cons, name
                assert all(p <= t for t in cons if t.related(a, b)), name


def test_is_congruence(N5):
    assert is_congruence(N5, [0, 0, 2, 2, 2])
    assert not is_congruence(N5, [0, 1, 2, 2, 0])
    assert not is_congruence(N5, [0, 0])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_worklist_order_does_not_matter(seed, k):
    rng = random.Random(seed)
    L = corpus.named(rng.choice(["N5", "M3xC2", "B3", "Fano"]))
    pairs = [(rng.randrange(L.n), rng.randrange(L.n)) for _ in range(k)]
    fast = generate(L, pairs)
    assert generate_worklist(L, pairs) == fast
    assert generate_worklist(L, pairs, random.Random(seed + 1)) == fast
    assert is_congruence(L, fast)


def test_join_and_meet(N5):
    a = principal_congruence(N5, 2, 3)
    b = principal_congruence(N5, 0, 1)
    j = join(N5, a, b)
    assert a <= j and b <= j and is_congruence(N5, j)
    assert b == j and meet(a, b) == a
    c = principal_congruence(N5, 0, 2)
    assert c.blocks() == [[0, 2, 3], [1, 4]]
    assert meet(b, c) == a
    assert join(N5, b, c) == Congruence.total(5)


def test_congruence_lattice_is_distributive():
    # congruence lattices of lattices are distributive
    from cpext.lattice import is_distributive
    for name in ("N5", "M3xC2", "Fano", "B3"):
        C = all_congruences(corpus.named(name))
        assert is_distributive(C.lattice), name


def test_cover_classes(M3, C3):
    assert len(cover_class_representatives(M3)) == 1
    assert len(cover_class_representatives(C3)) == 2
    assert cover_class_representatives(corpus.chain(1)) == []


def test_restrict_is_monotone():
    L = corpus.m3()
    T = build_m3hat(L)
    cons = list(all_congruences(T.lattice))
    for s in cons:
        for t in cons:
            if s <= t:
                assert restrict(s, T.diagonal) <= restrict(t, T.diagonal)


def test_size_cap():
    with pytest.raises(SizeLimitExceeded):
        all_congruences(corpus.boolean_lattice(3), max_congruences=4)


def test_array_round_trip():
    t = Congruence.from_labels([0, 0, 1])
    assert np.array_equal(t.array(), [0, 0, 2])
