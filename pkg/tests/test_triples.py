import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cpext import corpus
from cpext.congruence import Congruence, all_congruences, restrict
from cpext.errors import NotBoolean, SizeLimitExceeded, TrivialLattice
from cpext.lattice import M3 as M3_PATTERN, is_ideal, is_isomorphic, is_pattern_copy, sublattice
from cpext.suite import boolean_triples_bruteforce, triple_property_checks
from cpext.triples import (ATOMS_OF_B8, COMPARABLE_PAIR, DIAGONAL, TWO_VALUES, build_m3hat,
                           classify, closure, is_boolean, lift_congruence, satisfies_S,
                           spanning_m3, witness_R, zero_embedding)

o, a, b, c, i = range(5)


def test_three_chain_middle_triple(C3):
    assert not is_boolean(C3, (0, 1, 2))
    assert closure(C3, (0, 1, 2)) == (1, 1, 2)


def test_m3_examples(M3):
    assert is_boolean(M3, (a, b, o))
    assert witness_R(M3, (a, b, o)) == (i, a, b)
    assert satisfies_S(M3, (a, b, c)) and not is_boolean(M3, (a, b, c))
    assert closure(M3, (b, c, a)) == (i, i, i)
    assert witness_R(M3, (a, b, c)) is None


def test_closure_with_bottom_and_top(small_lattices):
    for _, L in small_lattices:
        for x in range(L.n):
            assert closure(L, (x, L.bottom, L.top)) == (x, x, L.top)


@pytest.mark.parametrize("name, size", [
    ("C1", 1), ("C2", 5), ("C3", 12), ("C4", 22), ("C5", 35), ("C6", 51),
    ("B2", 25), ("B3", 125), ("M3", 44), ("N5", 41), ("M3xC2", 220),
])
def test_sizes(name, size):
    assert len(build_m3hat(corpus.named(name))) == size


def test_chain_sizes_follow_formula():
    # in a chain a triple is Boolean unless its minimum occurs exactly once
    for k in range(1, 8):
        strict_min = 3 * sum(j * j for j in range(k))
        assert len(build_m3hat(corpus.chain(k))) == k ** 3 - strict_min


def test_members_match_bruteforce(small_lattices):
    for name, L in small_lattices:
        assert build_m3hat(L).members == boolean_triples_bruteforce(L), name


def test_two_chain_is_m3(C2):
    T = build_m3hat(C2)
    assert set(T.members) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)}
    assert is_isomorphic(T.lattice, corpus.m3()) is not None


def test_triple_property_checks_pass(small_lattices):
    for name, L in small_lattices:
        assert triple_property_checks(L) == [], name


def test_classify_examples(C2, B3):
    case = classify(C2, (0, 0, 1))
    assert case.kind == TWO_VALUES and case.pattern == "aab" and (case.a, case.b) == (0, 1)
    assert classify(C2, (1, 1, 1)).kind == DIAGONAL
    atoms = [B3.element(s) for s in ("001", "010", "100")]
    case = classify(B3, tuple(atoms))
    assert case.kind == ATOMS_OF_B8
    assert case.cube[0] == B3.bottom and case.cube[7] == B3.top
    assert case.reconstruct(B3) == tuple(atoms)


def test_classify_comparable_pair(B3):
    x, y = B3.element("011"), B3.element("110")
    m = int(B3.meet[x, y])
    case = classify(B3, (x, m, y))
    assert case.kind == COMPARABLE_PAIR and case.pattern == "amb"
    assert case.reconstruct(B3) == (x, m, y)


def test_classify_rejects_non_boolean(C3):
    with pytest.raises(NotBoolean):
        classify(C3, (0, 1, 2))


def test_zero_embedding_image_is_ideal(small_lattices):
    for name, L in small_lattices:
        T = build_m3hat(L)
        e = zero_embedding(T)
        assert is_ideal(T.lattice, e.image()), name
        sub, _ = sublattice(T.lattice, e.image())
        assert is_isomorphic(sub, L) is not None


@pytest.mark.parametrize("name", ["C2", "C3", "M3", "N5"])
def test_spanning_m3(name):
    T = build_m3hat(corpus.named(name))
    span = spanning_m3(T)
    K = T.lattice
    assert is_pattern_copy(K, span, M3_PATTERN)
    assert span[0] == K.bottom and span[4] == K.top


def test_spanning_m3_trivial():
    with pytest.raises(TrivialLattice):
        spanning_m3(build_m3hat(corpus.chain(1)))


@pytest.mark.parametrize("name", ["C3", "N5", "B2", "M3"])
def test_lift_then_restrict(name):
    L = corpus.named(name)
    T = build_m3hat(L)
    lifted = []
    for theta in all_congruences(L):
        up = lift_congruence(T, theta)
        assert up in all_congruences(T.lattice)
        assert restrict(up, T.diagonal) == theta
        lifted.append(up)
    assert len(set(lifted)) == len(lifted)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["N5", "M3", "B3", "M3xC2", "C4"]), st.data())
def test_closure_is_least_boolean_above(name, data):
    L = corpus.named(name)
    t = tuple(data.draw(st.integers(0, L.n - 1)) for _ in range(3))
    cl = closure(L, t)
    assert is_boolean(L, cl)
    assert all(L.leq[p, q] for p, q in zip(t, cl))
    for s in build_m3hat(L).members:
        if all(L.leq[p, q] for p, q in zip(t, s)):
            assert all(L.leq[p, q] for p, q in zip(cl, s))


def test_triple_lattice_order_is_componentwise(M3):
    T = build_m3hat(M3)
    for p, q in itertools.product(range(len(T)), repeat=2):
        s, t = T.members[p], T.members[q]
        assert T.lattice.leq[p, q] == all(M3.leq[x, y] for x, y in zip(s, t))


def test_size_cap():
    with pytest.raises(SizeLimitExceeded):
        build_m3hat(corpus.chain(5), max_triples=100)


def test_render(M3):
    T = build_m3hat(M3)
    assert T.render(T.index((a, b, o))) == "<a,b,o>"
