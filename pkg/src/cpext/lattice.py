"""Finite lattices stored as an order matrix plus total meet/join tables.

Elements are the integers ``0..n-1``; labels are for display only.
"""

from functools import cached_property

import numpy as np

from .errors import CyclicCovers, LatticeError, NotALattice

N5 = "N5"
M3 = "M3"


def _readonly(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _bound_table(leq, upper=False):
    """Greatest lower (or least upper) bounds of all pairs, -1 where missing.

    ``d[x, a]`` means x lies below a (above a when ``upper``).  The common
    bounds of a pair form a down-set, so the glb is the common bound whose
    own down-set is exactly as large as the set of common bounds.
    """
    d = leq.T if upper else leq
    n = d.shape[0]
    size = d.sum(axis=0)
    weight = (size + 1)[:, None]
    cols = np.arange(n)
    table = np.full((n, n), -1, dtype=np.int64)
    for a in range(n):
        common = d & d[:, a][:, None]
        count = common.sum(axis=0)
        best = np.where(common, weight, 0).argmax(axis=0)
        ok = (count > 0) & common[best, cols] & (size[best] == count)
        table[a] = np.where(ok, best, -1)
    return table


def _transitive_closure(rel):
    rel = rel.copy()
    for k in range(rel.shape[0]):
        rel |= rel[:, k:k + 1] & rel[k:k + 1, :]
    return rel


def _check_partial_order(leq):
    n = leq.shape[0]
    if leq.shape != (n, n):
        raise LatticeError("order relation must be square")
    if not leq.diagonal().all():
        raise LatticeError("order relation is not reflexive")
    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        a, b = map(int, np.argwhere(both)[0])
        raise CyclicCovers(a, b)
    f = leq.astype(np.float32)
    if ((f @ f > 0) & ~leq).any():
        raise LatticeError("order relation is not transitive")


def poset_is_lattice(n, leq):
    """Return ``(True, None)`` if every pair has a meet and a join,
    otherwise ``(False, (a, b))`` for the first failing pair."""
    leq = np.asarray(leq, dtype=bool).reshape(n, n)
    if n == 0:
        return False, None
    meet = _bound_table(leq)
    join = _bound_table(leq, upper=True)
    bad = (meet < 0) | (join < 0)
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        return False, (a, b)
    return True, None


class FiniteLattice:
    """A finite lattice given by its order matrix and meet/join tables.

    Instances are immutable; all arrays are read-only.
    """

    def __init__(self, leq, meet, join, labels=None):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if n < 1:
            raise LatticeError("a lattice needs at least one element")
        self.leq = _readonly(leq)
        self.meet = _readonly(np.asarray(meet, dtype=np.int64))
        self.join = _readonly(np.asarray(join, dtype=np.int64))
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise LatticeError("wrong number of labels")
        self.labels = tuple(str(s) for s in labels)

    @classmethod
    def from_order(cls, leq, labels=None):
        leq = np.array(leq, dtype=bool)
        _check_partial_order(leq)
        meet = _bound_table(leq)
        if (meet < 0).any():
            a, b = map(int, np.argwhere(meet < 0)[0])
            raise NotALattice(a, b, "meet")
        join = _bound_table(leq, upper=True)
        if (join < 0).any():
            a, b = map(int, np.argwhere(join < 0)[0])
            raise NotALattice(a, b, "join")
        return cls(leq, meet, join, labels)

    @classmethod
    def from_covers(cls, n, covers, labels=None):
        rel = np.eye(n, dtype=bool)
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise LatticeError(f"cover ({lo}, {hi}) out of range for n={n}")
            rel[lo, hi] = True
        return cls.from_order(_transitive_closure(rel), labels)

    @property
    def n(self):
        return self.leq.shape[0]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"<FiniteLattice n={self.n}>"

    @cached_property
    def bottom(self):
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @cached_property
    def top(self):
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    @cached_property
    def cover_matrix(self):
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        f = lt.astype(np.float32)
        return _readonly(lt & ((f @ f) == 0))

    def covers(self):
        """Sorted list of cover pairs ``(lower, upper)``."""
        return [(int(a), int(b)) for a, b in np.argwhere(self.cover_matrix)]

    @cached_property
    def heights(self):
        order = np.argsort(self.leq.sum(axis=0), kind="stable")
        h = np.zeros(self.n, dtype=np.int64)
        cov = self.cover_matrix
        for x in order:
            below = np.flatnonzero(cov[:, x])
            if below.size:
                h[x] = h[below].max() + 1
        return _readonly(h)

    def element(self, token):
        """Resolve a label or a decimal index to an element."""
        token = str(token)
        if token in self.labels:
            return self.labels.index(token)
        if token.isdigit() and int(token) < self.n:
            return int(token)
        raise LatticeError(f"no element {token!r}")

    def check(self):
        """Verify every lattice invariant; raises LatticeError on failure."""
        _check_partial_order(np.array(self.leq))
        n = self.n
        if not np.array_equal(self.meet, _bound_table(np.array(self.leq))):
            raise LatticeError("meet table is not the glb table")
        if not np.array_equal(self.join, _bound_table(np.array(self.leq), upper=True)):
            raise LatticeError("join table is not the lub table")
        r = np.arange(n)
        m, j = self.meet, self.join
        if not (np.array_equal(m, m.T) and np.array_equal(j, j.T)):
            raise LatticeError("operations not commutative")
        if not (np.array_equal(m[r[:, None], j], np.broadcast_to(r[:, None], (n, n)))
                and np.array_equal(j[r[:, None], m], np.broadcast_to(r[:, None], (n, n)))):
            raise LatticeError("absorption fails")
        return True


# -- structural predicates --------------------------------------------------

def distributive_failure(L):
    """First (x, y, z) with x^(y v z) != (x^y) v (x^z), or None."""
    m, j = L.meet, L.join
    for x in range(L.n):
        lhs = m[x][j]
        rhs = j[m[x][:, None], m[x][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return (x, int(bad[0, 0]), int(bad[0, 1]))
    return None


def modular_failure(L):
    """First (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z, or None."""
    m, j = L.meet, L.join
    r = np.arange(L.n)
    for x in range(L.n):
        lhs = j[x][m]
        rhs = m[j[x][:, None], r[None, :]]
        bad = np.argwhere((lhs != rhs) & L.leq[x][None, :])
        if bad.size:
            return (x, int(bad[0, 0]), int(bad[0, 1]))
    return None


def is_distributive(L, method="identity"):
    if method == "identity":
        return distributive_failure(L) is None
    if method == "sublattice":
        return find_sublattice(L, N5) is None and find_sublattice(L, M3) is None
    raise ValueError(method)


def is_modular(L, method="identity"):
    if method == "identity":
        return modular_failure(L) is None
    if method == "sublattice":
        return find_sublattice(L, N5) is None
    raise ValueError(method)


def semimodular_failure(L):
    """First (a, b) with a covering a^b while a v b does not cover b."""
    cov = L.cover_matrix
    r = np.arange(L.n)
    hyp = cov[L.meet, r[:, None]]
    concl = cov[r[None, :], L.join]
    bad = np.argwhere(hyp & ~concl)
    if bad.size:
        return (int(bad[0, 0]), int(bad[0, 1]))
    return None


def is_semimodular(L):
    return semimodular_failure(L) is None


# role order of witnesses returned by find_sublattice
#   N5: (bottom, low, high, top, side) with low < high
#   M3: (bottom, a, b, c, top)
def _pattern_lattice(pattern):
    if pattern == N5:
        return FiniteLattice.from_covers(5, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)])
    if pattern == M3:
        return FiniteLattice.from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    raise ValueError(f"unknown pattern {pattern!r}")


def is_pattern_copy(L, elems, pattern):
    """True iff ``elems`` (in role order) form a sublattice of L isomorphic
    to ``pattern`` with the i-th element playing role i."""
    ref = _pattern_lattice(pattern)
    e = np.asarray(elems)
    if len(set(e.tolist())) != len(e):
        return False
    return (np.array_equal(L.meet[e[:, None], e[None, :]], e[ref.meet])
            and np.array_equal(L.join[e[:, None], e[None, :]], e[ref.join]))


def find_sublattice(L, pattern):
    m, j = L.meet, L.join
    n = L.n
    if pattern == N5:
        lt = L.leq & ~np.eye(n, dtype=bool)
        for s in range(n):
            hit = (lt & (m[s][:, None] == m[s][None, :])
                   & (j[s][:, None] == j[s][None, :]))
            found = np.argwhere(hit)
            if found.size:
                lo, hi = map(int, found[0])
                return (int(m[s, lo]), lo, hi, int(j[s, lo]), s)
        return None
    if pattern == M3:
        r = np.arange(n)
        for a in range(n):
            mo, jo = m[a], j[a]
            hit = ((mo[:, None] == mo[None, :]) & (m == mo[:, None])
                   & (jo[:, None] == jo[None, :]) & (j == jo[:, None])
                   & (r[:, None] > a) & (r[None, :] > r[:, None]))
            found = np.argwhere(hit)
            if found.size:
                b, c = map(int, found[0])
                return (int(mo[b]), a, b, c, int(jo[b]))
        return None
    raise ValueError(f"unknown pattern {pattern!r}")


# -- subsets -----------------------------------------------------------------

def _members(S):
    return np.fromiter(sorted(S), dtype=np.int64)


def is_ideal(L, S):
    if not S:
        return False
    s = _members(S)
    down = L.leq[:, s].any(axis=1)
    if set(np.flatnonzero(down).tolist()) != set(S):
        return False
    return set(L.join[s[:, None], s[None, :]].ravel().tolist()) <= set(S)


def is_filter(L, S):
    if not S:
        return False
    s = _members(S)
    up = L.leq[s, :].any(axis=0)
    if set(np.flatnonzero(up).tolist()) != set(S):
        return False
    return set(L.meet[s[:, None], s[None, :]].ravel().tolist()) <= set(S)


def principal_filter(L, a):
    return frozenset(np.flatnonzero(L.leq[a, :]).tolist())


def principal_ideal(L, a):
    return frozenset(np.flatnonzero(L.leq[:, a]).tolist())


def interval(L, a, b):
    return frozenset(np.flatnonzero(L.leq[a, :] & L.leq[:, b]).tolist())


def is_sublattice(L, S):
    s = _members(S)
    if not s.size:
        return False
    closed = set(L.meet[s[:, None], s[None, :]].ravel().tolist())
    closed |= set(L.join[s[:, None], s[None, :]].ravel().tolist())
    return closed <= set(S)


def generated_sublattice(L, S):
    """Smallest subset containing S closed under meet and join."""
    cur = set(S)
    while True:
        s = _members(cur)
        new = (cur | set(L.meet[s[:, None], s[None, :]].ravel().tolist())
               | set(L.join[s[:, None], s[None, :]].ravel().tolist()))
        if new == cur:
            return frozenset(cur)
        cur = new


def convex_sublattice_generated(L, S):
    """Smallest subset containing S closed under meet, join and betweenness."""
    cur = set(S)
    if not cur:
        raise LatticeError("convex closure of the empty set")
    while True:
        s = _members(cur)
        between = L.leq[s, :].any(axis=0) & L.leq[:, s].any(axis=1)
        new = (cur | set(np.flatnonzero(between).tolist())
               | set(L.meet[s[:, None], s[None, :]].ravel().tolist())
               | set(L.join[s[:, None], s[None, :]].ravel().tolist()))
        if new == cur:
            return frozenset(cur)
        cur = new


def sublattice(L, S):
    """The sublattice induced on S as a new lattice, plus the sorted
    original indices (new index i corresponds to ``elems[i]``)."""
    if not is_sublattice(L, S):
        raise LatticeError("subset is not closed under meet and join")
    elems = _members(S)
    pos = np.full(L.n, -1, dtype=np.int64)
    pos[elems] = np.arange(elems.size)
    sub = FiniteLattice(
        L.leq[elems[:, None], elems[None, :]],
        pos[L.meet[elems[:, None], elems[None, :]]],
        pos[L.join[elems[:, None], elems[None, :]]],
        [L.labels[i] for i in elems],
    )
    return sub, tuple(int(i) for i in elems)


# -- isomorphism -------------------------------------------------------------

def _signatures(L):
    cov = L.cover_matrix
    depth = _co_heights(L)
    return [
        (int(L.heights[x]), int(depth[x]), int(cov[:, x].sum()), int(cov[x].sum()),
         int(L.leq[:, x].sum()), int(L.leq[x].sum()))
        for x in range(L.n)
    ]


def _co_heights(L):
    order = np.argsort(L.leq.sum(axis=1), kind="stable")
    d = np.zeros(L.n, dtype=np.int64)
    for x in order:
        above = np.flatnonzero(L.cover_matrix[x])
        if above.size:
            d[x] = d[above].max() + 1
    return d


def is_isomorphic(L, K):
    """An order isomorphism L -> K as a tuple ``f`` (``f[x]`` in K), or None."""
    if L.n != K.n:
        return None
    sl, sk = _signatures(L), _signatures(K)
    if sorted(sl) != sorted(sk):
        return None
    n = L.n
    order = sorted(range(n), key=lambda x: (int(L.heights[x]), x))
    cand = {x: [y for y in range(n) if sk[y] == sl[x]] for x in order}
    f = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        x = order[i]
        for y in cand[x]:
            if used[y]:
                continue
            if all(L.leq[x, w] == K.leq[y, f[w]] and L.leq[w, x] == K.leq[f[w], y]
                   for w in order[:i]):
                f[x], used[y] = y, True
                if extend(i + 1):
                    return True
                f[x], used[y] = -1, False
        return False

    return tuple(f) if extend(0) else None
