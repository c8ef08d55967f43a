"""Named lattices, exhaustive small-lattice enumeration and random lattices."""

import itertools
import logging
import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import SizeLimitExceeded, UnknownName
from .lattice import FiniteLattice, poset_is_lattice

log = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 6

# lines of the Fano plane on points 1..7 (difference set {1, 2, 4} mod 7)
FANO_LINES = [tuple(sorted((p + d - 1) % 7 + 1 for d in (0, 1, 3))) for p in range(1, 8)]


def chain(k):
    return FiniteLattice.from_covers(k, [(i, i + 1) for i in range(k - 1)])


def boolean_lattice(k):
    size = 1 << k
    leq = np.array([[(a & b) == a for b in range(size)] for a in range(size)], dtype=bool)
    return FiniteLattice.from_order(leq, [format(a, f"0{k}b")[::-1] for a in range(size)])


def product(L, K):
    """Direct product; the pair (a, b) gets index a * |K| + b."""
    leq = np.einsum("ac,bd->abcd", L.leq, K.leq).reshape(L.n * K.n, L.n * K.n)
    labels = [a + b for a in L.labels for b in K.labels]
    return FiniteLattice.from_order(leq.astype(bool), labels)


def m3():
    return FiniteLattice.from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
                                     ["o", "a", "b", "c", "i"])


def n5():
    # 0 < a < 1 and 0 < b < c < 1
    return FiniteLattice.from_covers(5, [(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)],
                                     ["0", "a", "b", "c", "1"])


def fano():
    """Subspace lattice of the Fano plane: 0, points p1..p7, lines, 1."""
    points = list(range(1, 8))
    labels = ["0"] + [f"p{p}" for p in points] + ["l" + "".join(map(str, ln)) for ln in FANO_LINES] + ["1"]
    covers = [(0, p) for p in points]
    for k, ln in enumerate(FANO_LINES):
        covers += [(p, 8 + k) for p in ln]
        covers.append((8 + k, 15))
    return FiniteLattice.from_covers(16, covers, labels)


_NAMED = {
    **{f"C{k}": (lambda k=k: chain(k)) for k in range(1, 7)},
    "B2": lambda: boolean_lattice(2),
    "B3": lambda: boolean_lattice(3),
    "M3": m3,
    "N5": n5,
    "M3xC2": lambda: product(m3(), chain(2)),
    "Fano": fano,
}


def names():
    return list(_NAMED)


def named(name):
    try:
        return _NAMED[name]()
    except KeyError:
        raise UnknownName(f"no corpus lattice named {name!r}") from None


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    name: str
    lattice: FiniteLattice
    distributive: bool = None
    modular: bool = None
    simple: bool = None


# flags established independently of the predicates they are checked against
_KNOWN = {
    "C1": (True, True, False), "C2": (True, True, True),
    "B2": (True, True, False), "B3": (True, True, False),
    "M3": (False, True, True), "N5": (False, False, False),
    "M3xC2": (False, True, False), "Fano": (False, True, True),
}


def entries():
    out = []
    for name in _NAMED:
        if name in _KNOWN:
            d, m, s = _KNOWN[name]
        else:
            d, m, s = True, True, None
        out.append(CorpusEntry(name, named(name), d, m, s))
    return out


def enumerate_lattices(n):
    """All lattices on 0..n-1 whose order is contained in the index order,
    with 0 the bottom and n-1 the top.  Isomorphic copies are retained."""
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise SizeLimitExceeded("enumeration size", n, MAX_ENUMERATION_SIZE)
    if n == 1:
        return [chain(1)]
    middle = range(1, n - 1)
    pairs = list(itertools.combinations(middle, 2))
    out = []
    for mask in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if mask >> k & 1}
        if any((a, c) not in rel for (a, b) in rel for (b2, c) in rel if b == b2):
            continue
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        for a, b in rel:
            leq[a, b] = True
        if poset_is_lattice(n, leq)[0]:
            out.append(FiniteLattice.from_order(leq))
    return out


def random_lattice(n, seed, attempts=200):
    """A meet/join-closed subset of a Boolean lattice containing its bounds.

    Deterministic for fixed ``seed``.  Elements are added at random and
    rejected when the closure overshoots ``n``; if ``n`` is never hit the
    closest size found is returned (and logged).
    """
    if n == 1:
        return chain(1)
    k = math.ceil(math.log2(n)) + 2
    full = (1 << k) - 1
    rng = random.Random(seed)

    def closed(s):
        s = set(s)
        while True:
            new = s | {a & b for a in s for b in s} | {a | b for a in s for b in s}
            if new == s:
                return s
            s = new

    best = None
    for _ in range(attempts):
        cur = {0, full}
        stalled = 0
        while len(cur) < n and stalled < 50:
            cand = rng.randrange(1, full)
            new = closed(cur | {cand})
            if len(new) > n or new == cur:
                stalled += 1
            else:
                cur, stalled = new, 0
        if best is None or abs(len(cur) - n) < abs(len(best) - n):
            best = cur
        if len(best) == n:
            break
    if len(best) != n:
        log.warning("random_lattice: asked for %d elements, got %d", n, len(best))
    elems = sorted(best)
    leq = np.array([[(a & b) == a for b in elems] for a in elems], dtype=bool)
    return FiniteLattice.from_order(leq, [format(a, f"0{k}b")[::-1] for a in elems])
