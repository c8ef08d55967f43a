"""Boolean triples of a finite lattice and the lattice they form.

A triple <x,y,z> of L is Boolean when each component equals the meet of its
joins with the other two, e.g. x = (x v y) ^ (x v z).  The Boolean triples,
ordered componentwise, form a lattice: meets are componentwise and the join
is the Boolean closure of the componentwise join.  The base lattice sits in
it along the diagonal x -> <x,x,x>.
"""

from dataclasses import dataclass

import numpy as np

from .congruence import Congruence
from .embedding import Embedding
from .errors import NotBoolean, SizeLimitExceeded, TrivialLattice
from .lattice import FiniteLattice, M3, N5, _bound_table, find_sublattice, is_pattern_copy

DEFAULT_MAX_TRIPLES = 1_000_000


def _closure_arrays(L, x, y, z):
    m, j = L.meet, L.join
    return (m[j[x, y], j[x, z]], m[j[y, x], j[y, z]], m[j[z, x], j[z, y]])


def closure(L, t):
    """Smallest Boolean triple above t."""
    return tuple(int(c) for c in _closure_arrays(L, *t))


def is_boolean(L, t):
    return closure(L, t) == tuple(t)


def satisfies_S(L, t):
    x, y, z = t
    m = L.meet
    return m[x, y] == m[y, z] == m[z, x]


def witness_R(L, t):
    """(u, v, w) with x = u^v, y = u^w, z = v^w, or None if t is not Boolean."""
    if not is_boolean(L, t):
        return None
    x, y, z = t
    j, m = L.join, L.meet
    u, v, w = int(j[x, y]), int(j[x, z]), int(j[y, z])
    assert (m[u, v], m[u, w], m[v, w]) == (x, y, z)
    return (u, v, w)


def render_triple(L, t):
    return "<" + ",".join(L.labels[c] for c in t) + ">"


class TripleLattice:
    """The lattice of Boolean triples of ``base``.

    ``members`` are listed in lexicographic order of (x, y, z); member i is
    element i of ``lattice``.
    """

    def __init__(self, base, members, lattice):
        self.base = base
        self.members = members
        self.lattice = lattice
        self.index_of = {t: i for i, t in enumerate(members)}
        self.diagonal = Embedding(base, lattice, tuple(self.index_of[(a, a, a)] for a in range(base.n)))

    def __len__(self):
        return len(self.members)

    def index(self, t):
        return self.index_of[tuple(t)]

    def render(self, i):
        return render_triple(self.base, self.members[i])


def boolean_mask(L):
    """Flags over all n**3 triples in lexicographic order."""
    n = L.n
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    cx, cy, cz = _closure_arrays(L, x, y, z)
    return (cx == x) & (cy == y) & (cz == z)


def build_m3hat(L, max_triples=DEFAULT_MAX_TRIPLES, validate=True):
    n = L.n
    if n ** 3 > max_triples:
        raise SizeLimitExceeded("candidate triples", n ** 3, max_triples)
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    keep = boolean_mask(L)
    xs, ys, zs = x[keep], y[keep], z[keep]
    k = xs.size
    lookup = np.full(n ** 3, -1, dtype=np.int64)
    lookup[(xs * n + ys) * n + zs] = np.arange(k)

    def pair(table, c):
        return table[c[:, None], c[None, :]]

    leq = pair(L.leq, xs) & pair(L.leq, ys) & pair(L.leq, zs)
    mx, my, mz = pair(L.meet, xs), pair(L.meet, ys), pair(L.meet, zs)
    meet = lookup[(mx * n + my) * n + mz]
    jx, jy, jz = _closure_arrays(L, pair(L.join, xs), pair(L.join, ys), pair(L.join, zs))
    join = lookup[(jx * n + jy) * n + jz]
    if (meet < 0).any() or (join < 0).any():
        raise RuntimeError("Boolean triples not closed under the triple operations")
    if validate:
        if not np.array_equal(join, _bound_table(leq, upper=True)):
            raise RuntimeError("closure join disagrees with least upper bounds")
        if not np.array_equal(meet, _bound_table(leq)):
            raise RuntimeError("componentwise meet disagrees with greatest lower bounds")
    members = [(int(a), int(b), int(c)) for a, b, c in zip(xs, ys, zs)]
    labels = [render_triple(L, t) for t in members]
    return TripleLattice(L, members, FiniteLattice(leq, meet, join, labels))


# -- classification of Boolean triples ----------------------------------------

DIAGONAL = "Diagonal"
TWO_VALUES = "TwoValues"
COMPARABLE_PAIR = "ComparablePairWithMeet"
ATOMS_OF_B8 = "AtomsOfB8"


@dataclass(frozen=True)
class TripleCase:
    """Which shape a Boolean triple has, with the elements that witness it.

    TwoValues: ``a < b`` and ``pattern`` such as ``"aab"``.
    ComparablePairWithMeet: incomparable ``a``, ``b`` and ``pattern`` in
    ``{"abm", "amb", "mab"}`` where ``m`` marks the slot holding a ^ b.
    AtomsOfB8: ``cube[k]`` is the join of the components selected by the
    bits of k (``cube[0]`` the common meet), so the triple is
    ``(cube[1], cube[2], cube[4])``.
    """
    kind: str
    a: int = None
    b: int = None
    pattern: str = None
    cube: tuple = None

    def reconstruct(self, L):
        if self.kind == DIAGONAL:
            return (self.a, self.a, self.a)
        if self.kind == TWO_VALUES:
            return tuple(self.a if p == "a" else self.b for p in self.pattern)
        if self.kind == COMPARABLE_PAIR:
            vals = {"a": self.a, "b": self.b, "m": int(L.meet[self.a, self.b])}
            return tuple(vals[p] for p in self.pattern)
        return (self.cube[1], self.cube[2], self.cube[4])


def classify(L, t):
    t = tuple(int(c) for c in t)
    if not is_boolean(L, t):
        raise NotBoolean(f"{render_triple(L, t)} is not Boolean")
    values = sorted(set(t))
    leq, m, j = L.leq, L.meet, L.join
    if len(values) == 1:
        return TripleCase(DIAGONAL, a=t[0])
    if len(values) == 2:
        lo, hi = values
        if not leq[lo, hi]:
            lo, hi = hi, lo
        if not leq[lo, hi]:
            raise RuntimeError("two-valued Boolean triple with incomparable values")
        return TripleCase(TWO_VALUES, a=lo, b=hi, pattern="".join("a" if c == lo else "b" for c in t))
    x, y, z = t
    if leq[x, y] or leq[y, x] or leq[x, z] or leq[z, x] or leq[y, z] or leq[z, y]:
        for pos in range(3):
            rest = [t[i] for i in range(3) if i != pos]
            a, b = rest
            if t[pos] == m[a, b] and not leq[a, b] and not leq[b, a]:
                pattern = ["a", "b"]
                pattern.insert(pos, "m")
                return TripleCase(COMPARABLE_PAIR, a=a, b=b, pattern="".join(pattern))
        raise RuntimeError(f"{render_triple(L, t)} fits no case")
    cube = [0] * 8
    for k in range(8):
        parts = [t[i] for i in range(3) if k >> i & 1]
        if not parts:
            cube[k] = int(m[m[x, y], z])
        else:
            acc = parts[0]
            for p in parts[1:]:
                acc = int(j[acc, p])
            cube[k] = int(acc)
    ok = len(set(cube)) == 8 and all(
        j[cube[p], cube[q]] == cube[p | q] and m[cube[p], cube[q]] == cube[p & q]
        for p in range(8) for q in range(8))
    if not ok:
        raise RuntimeError(f"{render_triple(L, t)} spans no eight-element Boolean sublattice")
    return TripleCase(ATOMS_OF_B8, cube=tuple(cube))


# -- embeddings and distinguished sublattices -----------------------------------

def zero_embedding(T):
    """x -> <x,0,0>; its image is an ideal of the triple lattice."""
    o = T.base.bottom
    return Embedding(T.base, T.lattice, tuple(T.index_of[(x, o, o)] for x in range(T.base.n)))


def spanning_m3(T):
    """Indices of <0,0,0>, <1,0,0>, <0,1,0>, <0,0,1>, <1,1,1> (M3 role order)."""
    L = T.base
    if L.n == 1:
        raise TrivialLattice("the one-element lattice has no spanning M3")
    o, i = L.bottom, L.top
    return tuple(T.index_of[t] for t in [(o, o, o), (i, o, o), (o, i, o), (o, o, i), (i, i, i)])


def lift_congruence(T, theta):
    """Componentwise extension of a congruence of the base lattice."""
    ids = theta.array()
    n = T.base.n
    keys = [(ids[x] * n + ids[y]) * n + ids[z] for x, y, z in T.members]
    return Congruence.from_labels(keys)


def proof_n5(T, m3):
    """The N5 inside the triple lattice built from an M3 = (o, a, b, c, i) of
    the base: <o,o,a> < <o,c,a> < <c,c,i> < <i,i,i> with side <b,o,a>.

    Returned in the (bottom, low, high, top, side) role order used by
    ``find_sublattice``.
    """
    o, a, b, c, i = m3
    return tuple(T.index_of[t] for t in
                 [(o, o, a), (o, c, a), (c, c, i), (i, i, i), (b, o, a)])


def modularity_witness(T):
    """An N5 of the triple lattice, or None when it is modular.

    When the base contains an M3 the N5 is the explicit one of ``proof_n5``;
    a non-modular base contributes its own N5 along the diagonal.
    """
    L = T.base
    m3 = find_sublattice(L, M3)
    if m3 is not None:
        five = proof_n5(T, m3)
        if not is_pattern_copy(T.lattice, five, N5):
            raise RuntimeError("proof N5 is not a pentagon")
        return five
    n5 = find_sublattice(L, N5)
    if n5 is not None:
        return tuple(T.diagonal(x) for x in n5)
    return find_sublattice(T.lattice, N5)

