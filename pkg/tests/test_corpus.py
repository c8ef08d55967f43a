import pytest
from hypothesis import given, settings, strategies as st

from cpext import corpus
from cpext.errors import SizeLimitExceeded, UnknownName
from cpext.lattice import is_distributive, is_modular, poset_is_lattice

from helpers import naturally_labeled_lattices


def test_enumeration_counts():
    assert [len(corpus.enumerate_lattices(n)) for n in range(1, 7)] == [1, 1, 1, 2, 7, 39]


def test_enumeration_against_oracle():
    for n in range(1, 7):
        assert len(corpus.enumerate_lattices(n)) == naturally_labeled_lattices(n)


def test_enumeration_is_naturally_labeled():
    for L in corpus.enumerate_lattices(5):
        assert L.bottom == 0 and L.top == 4
        for a in range(5):
            for b in range(a):
                assert not L.leq[a, b]


def test_enumeration_limit():
    with pytest.raises(SizeLimitExceeded):
        corpus.enumerate_lattices(7)


def test_fano_plane():
    assert len(corpus.FANO_LINES) == 7
    assert all(len(set(ln)) == 3 for ln in corpus.FANO_LINES)
    for p in range(1, 8):
        for q in range(p + 1, 8):
            assert sum(p in ln and q in ln for ln in corpus.FANO_LINES) == 1
    P = corpus.fano()
    assert P.n == 16
    assert is_modular(P) and not is_distributive(P)


def test_named_sizes():
    sizes = {name: corpus.named(name).n for name in corpus.names()}
    assert sizes == {"C1": 1, "C2": 2, "C3": 3, "C4": 4, "C5": 5, "C6": 6, "B2": 4, "B3": 8,
                     "M3": 5, "N5": 5, "M3xC2": 10, "Fano": 16}


def test_unknown_name():
    with pytest.raises(UnknownName):
        corpus.named("M4")


def test_entry_flags():
    from cpext.congruence import all_congruences
    for e in corpus.entries():
        assert is_distributive(e.lattice) == e.distributive, e.name
        assert is_modular(e.lattice) == e.modular, e.name
        if e.simple is not None:
            assert (len(all_congruences(e.lattice)) == 2) == e.simple, e.name


def test_product_labels():
    P = corpus.product(corpus.chain(2), corpus.chain(3))
    assert P.n == 6 and P.labels[0] == "00" and P.labels[-1] == "12"


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2 ** 32))
def test_random_lattice(n, seed):
    L = corpus.random_lattice(n, seed)
    assert poset_is_lattice(L.n, L.leq)[0]
    L.check()
    again = corpus.random_lattice(n, seed)
    assert (again.leq == L.leq).all() and again.labels == L.labels


def test_random_lattice_in_b5():
    L = corpus.random_lattice(8, 42)
    assert L.n == 8
    masks = [int(s[::-1], 2) for s in L.labels]
    assert all(len(s) == 5 for s in L.labels)
    assert 0 in masks and 31 in masks
    for p in masks:
        for q in masks:
            assert p & q in masks and p | q in masks
    assert corpus.random_lattice(1, 0).n == 1 and corpus.random_lattice(2, 0).n == 2
