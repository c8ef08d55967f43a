"""Extension verdicts and the gluing construction."""

from dataclasses import dataclass, field

import numpy as np

from .congruence import DEFAULT_MAX_CONGRUENCES, all_congruences, restrict
from .embedding import Embedding
from .errors import FilterTooSmall, NotAFilter, NotAnIdeal, NotIsomorphism
from .lattice import (FiniteLattice, _transitive_closure, convex_sublattice_generated,
                      is_filter, is_ideal, principal_filter, sublattice)
from .triples import DEFAULT_MAX_TRIPLES, build_m3hat, zero_embedding

__all__ = ["Embedding", "ExtensionReport", "verify_extension", "glue", "Gluing",
           "ideal_extension", "IdealExtension"]

VERDICTS = ("proper", "congruence_preserving", "extensive", "image_is_ideal")


def _yes(flag):
    return "yes" if flag else "no"


@dataclass(frozen=True)
class ExtensionReport:
    proper: bool
    congruence_preserving: bool
    extensive: bool
    image_is_ideal: bool
    con_sizes: tuple
    failure_witness: dict = field(default_factory=dict)

    def ok(self, *verdicts):
        return all(getattr(self, v) for v in (verdicts or VERDICTS))

    def to_text(self):
        lines = [f"{v}: {_yes(getattr(self, v))}" for v in VERDICTS]
        lines.append(f"con_sizes: {self.con_sizes[0]} {self.con_sizes[1]}")
        for k in sorted(self.failure_witness):
            lines.append(f"witness.{k}: {self.failure_witness[k]}")
        return "\n".join(lines) + "\n"

    def summary(self, verdicts=VERDICTS):
        return " ".join(f"{v}={_yes(getattr(self, v))}" for v in verdicts)


def verify_extension(e, max_congruences=DEFAULT_MAX_CONGRUENCES):
    L, K = e.source, e.target
    image = e.image()
    labels = K.labels
    witness = {}

    proper = len(image) < K.n
    if not proper:
        witness["proper"] = "image is the whole target"

    con_l = all_congruences(L, max_congruences)
    con_k = all_congruences(K, max_congruences)
    seen = {}
    injective = True
    for t in con_k:
        r = restrict(t, e)
        if r in seen:
            injective = False
            witness.setdefault("congruence_preserving",
                               f"{t.render(labels)} and {seen[r].render(labels)} "
                               f"both restrict to {r.render(L.labels)}")
        seen[r] = t
    missing = [t for t in con_l if t not in seen]
    if missing:
        witness.setdefault("congruence_preserving",
                           f"{missing[0].render(L.labels)} has no extension")
    cpe = injective and not missing

    hull = convex_sublattice_generated(K, image)
    extensive = len(hull) == K.n
    if not extensive:
        x = min(set(range(K.n)) - hull)
        witness["extensive"] = f"{labels[x]} outside the convex hull"

    ideal = is_ideal(K, image)
    if not ideal:
        m = np.fromiter(sorted(image), dtype=np.int64)
        below = set(np.flatnonzero(K.leq[:, m].any(axis=1)).tolist()) - image
        if below:
            witness["image_is_ideal"] = f"{labels[min(below)]} lies below the image"
        else:
            witness["image_is_ideal"] = "image not closed under joins"

    return ExtensionReport(proper, cpe, extensive, ideal, (len(con_l), len(con_k)), witness)


@dataclass(frozen=True, eq=False)
class Gluing:
    lattice: FiniteLattice
    from_first: Embedding     # L keeps its indices
    from_second: Embedding    # A - I is appended after L
    identification: dict      # F element of L -> I element of A


def _check_iso(L, F, A, I, iso):
    if set(iso) != set(F) or set(iso.values()) != set(I) or len(set(iso.values())) != len(iso):
        raise NotIsomorphism("map is not a bijection between the filter and the ideal")
    for p in F:
        for q in F:
            if L.leq[p, q] != A.leq[iso[p], iso[q]]:
                raise NotIsomorphism(f"order not preserved at {L.labels[p]}, {L.labels[q]}")


def glue(L, F, A, I, iso):
    """Hall-Dilworth gluing of L and A over the filter F of L identified with
    the ideal I of A via ``iso`` (a dict F -> I)."""
    F, I = frozenset(F), frozenset(I)
    if not is_filter(L, F):
        raise NotAFilter("F is not a filter of the first lattice")
    if not is_ideal(A, I):
        raise NotAnIdeal("I is not an ideal of the second lattice")
    iso = {int(k): int(v) for k, v in dict(iso).items()}
    _check_iso(L, F, A, I, iso)

    back = {v: k for k, v in iso.items()}
    rest = [a for a in range(A.n) if a not in I]
    nl = L.n
    a_to_k = np.array([back[a] if a in I else nl + rest.index(a) for a in range(A.n)])
    size = nl + len(rest)
    rel = np.zeros((size, size), dtype=bool)
    rel[:nl, :nl] = L.leq
    rel[a_to_k[:, None], a_to_k[None, :]] |= A.leq
    labels = list(L.labels)
    for a in rest:
        s = A.labels[a]
        while s in labels:
            s += "'"
        labels.append(s)
    K = FiniteLattice.from_order(_transitive_closure(rel), labels)
    g = Gluing(K, Embedding(L, K, tuple(range(nl))),
               Embedding(A, K, tuple(int(k) for k in a_to_k)), iso)
    if not (is_ideal(K, g.from_first.image()) and is_filter(K, g.from_second.image())):
        raise RuntimeError("gluing did not place the pieces as ideal and filter")
    return g


@dataclass(frozen=True, eq=False)
class IdealExtension:
    lattice: FiniteLattice
    embedding: Embedding
    gluing: Gluing
    triples: object
    report: ExtensionReport = None


def ideal_extension(L, a, max_triples=DEFAULT_MAX_TRIPLES,
                    max_congruences=DEFAULT_MAX_CONGRUENCES, verify=True):
    """Glue L along [a) to the Boolean-triple lattice of [a), matching
    x in [a) with <x,a,a>.  L becomes an ideal of the result."""
    F = principal_filter(L, a)
    if len(F) < 2:
        raise FilterTooSmall(f"[{L.labels[a]}) has a single element")
    sub, elems = sublattice(L, F)
    T = build_m3hat(sub, max_triples)
    z = zero_embedding(T)
    iso = {elems[i]: z.map[i] for i in range(sub.n)}
    g = glue(L, F, T.lattice, z.image(), iso)
    report = verify_extension(g.from_first, max_congruences) if verify else None
    return IdealExtension(g.lattice, g.from_first, g, T, report)
