"""Slow, independent oracles used only by the tests."""

import itertools


def leq_fn(L):
    leq = L.leq.tolist()
    return lambda a, b: leq[a][b]


def naive_bounds(n, leq):
    """(glb, lub) dicts by pairwise search, None where a bound is missing."""
    glb, lub = {}, {}
    for a, b in itertools.product(range(n), repeat=2):
        lower = [x for x in range(n) if leq(x, a) and leq(x, b)]
        upper = [x for x in range(n) if leq(a, x) and leq(b, x)]
        g = [x for x in lower if all(leq(y, x) for y in lower)]
        u = [x for x in upper if all(leq(x, y) for y in upper)]
        glb[a, b] = g[0] if len(g) == 1 else None
        lub[a, b] = u[0] if len(u) == 1 else None
    return glb, lub


def naive_is_lattice(n, leq):
    glb, lub = naive_bounds(n, leq)
    return all(v is not None for v in glb.values()) and all(v is not None for v in lub.values())


def naturally_labeled_lattices(n):
    """Count bounded orders on 0..n-1 contained in the index order that are
    lattices, by trying every set of strict pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if mask >> k & 1}
        rel |= {(i, i) for i in range(n)}
        if any((a, d) not in rel for (a, b) in rel for (c, d) in rel if b == c):
            continue
        le = lambda a, b: (a, b) in rel
        if not all(le(0, x) and le(x, n - 1) for x in range(n)):
            continue
        if naive_is_lattice(n, le):
            count += 1
    return count


def triple_le(L, s, t):
    return all(L.leq[a, b] for a, b in zip(s, t))
