"""Congruences of finite lattices.

A congruence is stored as a canonical block-id array: each element maps to
the smallest member of its block, so two congruences are equal exactly when
their arrays are.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import SizeLimitExceeded
from .lattice import FiniteLattice

DEFAULT_MAX_CONGRUENCES = 100_000


@dataclass(frozen=True)
class Congruence:
    ids: tuple

    @classmethod
    def from_labels(cls, labels):
        return cls(tuple(int(i) for i in _canonical(np.asarray(labels))))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n):
        return cls((0,) * n)

    @classmethod
    def from_blocks(cls, n, blocks):
        labels = np.arange(n)
        for block in blocks:
            block = list(block)
            labels[block] = block[0]
        return cls.from_labels(labels)

    @property
    def n(self):
        return len(self.ids)

    def related(self, a, b):
        return self.ids[a] == self.ids[b]

    def blocks(self):
        out = {}
        for x, r in enumerate(self.ids):
            out.setdefault(r, []).append(x)
        return [out[r] for r in sorted(out)]

    def num_blocks(self):
        return len(set(self.ids))

    def __str__(self):
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks()) + "}"

    def render(self, labels):
        return "{" + "|".join(",".join(labels[x] for x in b) for b in self.blocks()) + "}"

    def __le__(self, other):
        """Refinement order: every block of self lies inside a block of other."""
        o = other.ids
        return all(o[x] == o[r] for x, r in enumerate(self.ids))

    def array(self):
        return np.asarray(self.ids, dtype=np.int64)


def _canonical(labels):
    labels = np.asarray(labels, dtype=np.int64)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    return first[inverse.ravel()]


def _merge(n, labels, a, b):
    """Union the classes of pairs (a[k], b[k]) into the partition ``labels``."""
    graph = coo_matrix((np.ones(a.size, dtype=np.int8), (a, b)), shape=(n, n))
    _, comp = connected_components(graph, directed=False)
    return _canonical(comp[labels])


def _violations(L, labels):
    """Pairs of block ids that the substitution property forces together."""
    # labels are canonical, so labels[x] is the representative of x's block;
    # only elements that are not their own representative can violate
    rows = np.flatnonzero(labels != np.arange(labels.size))
    reps = labels[rows]
    a = np.concatenate([labels[L.meet[rows]].ravel(), labels[L.join[rows]].ravel()])
    b = np.concatenate([labels[L.meet[reps]].ravel(), labels[L.join[reps]].ravel()])
    bad = a != b
    return a[bad], b[bad]


def close(L, labels):
    """Least congruence containing the partition given by ``labels``."""
    labels = _canonical(labels)
    while True:
        a, b = _violations(L, labels)
        if not a.size:
            return Congruence(tuple(int(i) for i in labels))
        labels = _merge(L.n, labels, a, b)


def generate(L, pairs):
    """Least congruence relating every pair in ``pairs``."""
    pairs = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
    labels = _merge(L.n, np.arange(L.n), pairs[:, 0], pairs[:, 1])
    return close(L, labels)


def generate_worklist(L, pairs, rng=None):
    """Reference union-find closure processing pending pairs in a
    (optionally shuffled) worklist order.  Slow; used to check that the
    fixpoint does not depend on iteration order."""
    parent = list(range(L.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = [tuple(p) for p in pairs]
    translations = list(range(L.n))
    meet, join = L.meet.tolist(), L.join.tolist()
    while work:
        if rng is not None:
            k = rng.randrange(len(work))
            work[k], work[-1] = work[-1], work[k]
        x, y = work.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        if rng is not None:
            rng.shuffle(translations)
        for c in translations:
            work.append((meet[x][c], meet[y][c]))
            work.append((join[x][c], join[y][c]))
    return Congruence.from_labels([find(x) for x in range(L.n)])


def is_congruence(L, partition):
    labels = partition.array() if isinstance(partition, Congruence) else np.asarray(partition)
    if labels.shape != (L.n,):
        return False
    a, _ = _violations(L, _canonical(labels))
    return a.size == 0


def principal_congruence(L, a, b):
    if a == b:
        return Congruence.identity(L.n)
    return generate(L, [(a, b)])


def join(L, t, s):
    n = L.n
    labels = _merge(n, np.arange(n), np.concatenate([np.arange(n), np.arange(n)]),
                    np.concatenate([t.array(), s.array()]))
    return close(L, labels)


def meet(t, s):
    keys = {}
    return Congruence.from_labels([keys.setdefault(p, x) for x, p in enumerate(zip(t.ids, s.ids))])


def cover_class_representatives(L):
    """One cover per class of the projectivity relation on prime intervals.

    If b ^ (a v c) = a then the intervals [a, b] and [a v c, b v c] are
    perspective and generate the same principal congruence.
    """
    covers = np.argwhere(L.cover_matrix)
    k = len(covers)
    if not k:
        return []
    lo, hi = covers[:, 0], covers[:, 1]
    index = np.full((L.n, L.n), -1, dtype=np.int64)
    index[lo, hi] = np.arange(k)
    up_lo = L.join[lo]
    up_hi = L.join[hi]
    persp = (L.meet[hi[:, None], up_lo] == lo[:, None]) & (up_lo != up_hi)
    src, c = np.nonzero(persp)
    dst = index[up_lo[src, c], up_hi[src, c]]
    # outside modular lattices the image need not be a cover
    src, dst = src[dst >= 0], dst[dst >= 0]
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(k, k))
    _, comp = connected_components(graph, directed=False)
    _, first = np.unique(comp, return_index=True)
    return [(int(lo[i]), int(hi[i])) for i in sorted(first)]


class CongruenceLattice:
    """All congruences of a lattice together with the refinement lattice."""

    def __init__(self, base, congruences):
        self.base = base
        self.congruences = list(congruences)
        self.index_of = {c: i for i, c in enumerate(self.congruences)}
        k = len(self.congruences)
        leq = np.array([[self.congruences[i] <= self.congruences[j] for j in range(k)]
                        for i in range(k)], dtype=bool).reshape(k, k)
        self.lattice = FiniteLattice.from_order(leq, [str(c) for c in self.congruences])

    def __len__(self):
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def __contains__(self, c):
        return c in self.index_of


def all_congruences(L, max_congruences=DEFAULT_MAX_CONGRUENCES):
    """Every congruence of L, generated as joins of principal congruences.

    Principal congruences of covering pairs suffice: con(a, b) for a < b is
    the join of the principal congruences along any maximal chain a..b.  Of
    those, one cover per perspectivity class is enough.
    """
    n = L.n
    principals = []
    for a, b in cover_class_representatives(L):
        p = principal_congruence(L, a, b)
        if p not in principals:
            principals.append(p)
    found = {Congruence.identity(n)}
    frontier = [Congruence.identity(n)]
    while frontier:
        nxt = []
        for t in frontier:
            for p in principals:
                if p <= t:
                    continue
                u = join(L, t, p)
                if u not in found:
                    found.add(u)
                    nxt.append(u)
                    if len(found) > max_congruences:
                        raise SizeLimitExceeded("congruence count", len(found), max_congruences)
        frontier = nxt
    ordered = sorted(found, key=lambda c: (-c.num_blocks(), c.ids))
    for i, t in enumerate(ordered):
        for s in ordered[i + 1:]:
            if meet(t, s) not in found:
                raise RuntimeError("congruence set not closed under meet")
    return CongruenceLattice(L, ordered)


def restrict(theta, e):
    """Restriction of a congruence on ``e.target`` along the embedding e."""
    return Congruence.from_labels([theta.ids[e.map[x]] for x in range(e.source.n)])
