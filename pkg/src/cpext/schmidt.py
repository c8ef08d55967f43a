"""Schmidt's construction M3[D]: triples whose three pairwise meets agree.

For distributive D these triples form a modular lattice that is a
congruence-preserving extension of D; for other lattices the poset may fail
to be a lattice at all.
"""

from dataclasses import dataclass

import numpy as np

from .congruence import all_congruences, restrict
from .embedding import Embedding
from .errors import NotDistributive, SizeLimitExceeded
from .lattice import (FiniteLattice, M3, generated_sublattice, is_distributive, is_ideal,
                      is_isomorphic, is_modular, is_pattern_copy, is_sublattice,
                      poset_is_lattice, sublattice)
from .triples import DEFAULT_MAX_TRIPLES, build_m3hat, render_triple


@dataclass(frozen=True, eq=False)
class STriplePoset:
    base: FiniteLattice
    members: list
    leq: np.ndarray

    @property
    def index_of(self):
        return {t: i for i, t in enumerate(self.members)}

    def __len__(self):
        return len(self.members)


def build_s_poset(L, max_triples=DEFAULT_MAX_TRIPLES):
    n = L.n
    if n ** 3 > max_triples:
        raise SizeLimitExceeded("candidate triples", n ** 3, max_triples)
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    m = L.meet
    keep = (m[x, y] == m[y, z]) & (m[y, z] == m[z, x])
    xs, ys, zs = x[keep], y[keep], z[keep]
    leq = (L.leq[xs[:, None], xs[None, :]] & L.leq[ys[:, None], ys[None, :]]
           & L.leq[zs[:, None], zs[None, :]])
    members = [(int(a), int(b), int(c)) for a, b, c in zip(xs, ys, zs)]
    return STriplePoset(L, members, leq)


def m3_lattice_failure_witness(L, max_triples=DEFAULT_MAX_TRIPLES):
    """A pair of (S)-triples lacking a meet or a join, or None."""
    P = build_s_poset(L, max_triples)
    ok, pair = poset_is_lattice(len(P), P.leq)
    if ok:
        return None
    return P.members[pair[0]], P.members[pair[1]]


@dataclass(frozen=True, eq=False)
class SchmidtLattice:
    poset: STriplePoset
    lattice: FiniteLattice
    embedding: Embedding      # x -> <x,0,0>
    m3: tuple                 # <0,0,0>, <1,0,0>, <0,1,0>, <0,0,1>, <1,1,1>


def build_m3d(D, max_triples=DEFAULT_MAX_TRIPLES):
    if not is_distributive(D):
        raise NotDistributive("M3[D] needs a distributive D")
    P = build_s_poset(D, max_triples)
    K = FiniteLattice.from_order(P.leq, [render_triple(D, t) for t in P.members])
    idx = P.index_of
    o, i = D.bottom, D.top
    emb = Embedding(D, K, tuple(idx[(x, o, o)] for x in range(D.n)))
    m3 = tuple(idx[t] for t in [(o, o, o), (i, o, o), (o, i, o), (o, o, i), (i, i, i)])
    return SchmidtLattice(P, K, emb, m3)


def verify_schmidt(D, max_triples=DEFAULT_MAX_TRIPLES):
    """Check the five structural properties of M3[D] for D, plus agreement of
    M3[D] with the Boolean-triple lattice.  Returns ``{name: bool}``."""
    S = build_m3d(D, max_triples)
    K = S.lattice
    out = {"lattice": True, "modular": is_modular(K)}
    if D.n > 1:
        out["m3_sublattice"] = is_sublattice(K, S.m3) and is_pattern_copy(K, S.m3, M3)
    else:
        out["m3_sublattice"] = len(set(S.m3)) == 1
    image = S.embedding.image()
    sub, _ = sublattice(K, image)
    out["ideal_copy"] = is_ideal(K, image) and is_isomorphic(sub, D) is not None
    out["generated"] = generated_sublattice(K, image | set(S.m3)) == frozenset(range(K.n))
    con_d = all_congruences(D)
    con_k = all_congruences(K)
    restricted = [restrict(t, S.embedding) for t in con_k]
    out["congruence_bijection"] = (len(set(restricted)) == len(restricted)
                                   and set(restricted) == set(con_d))
    T = build_m3hat(D, max_triples)
    same_members = T.members == S.poset.members
    out["equals_m3hat"] = (same_members and np.array_equal(T.lattice.join, K.join)
                           and np.array_equal(T.lattice.meet, K.meet))
    return out
