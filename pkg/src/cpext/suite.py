"""Machine checks of the acceptance criteria, shared by ``cpext suite`` and
the test-suite.  Every criterion returns ``(ok, detail)``; ``run`` adds the
wall-clock budget check."""

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import corpus
from .congruence import Congruence, all_congruences
from .extensions import ideal_extension, verify_extension
from .lattice import (M3, N5, is_distributive, is_isomorphic, is_modular, is_pattern_copy,
                      is_semimodular, sublattice)
from .schmidt import m3_lattice_failure_witness, verify_schmidt
from .triples import (ATOMS_OF_B8, COMPARABLE_PAIR, DIAGONAL, TWO_VALUES, boolean_mask,
                      build_m3hat, classify, closure, modularity_witness, spanning_m3,
                      witness_R, zero_embedding)


# -- independent oracles ---------------------------------------------------------

def set_partitions(n):
    """All partitions of range(n) as restricted growth strings."""
    if n == 0:
        yield ()
        return

    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))

    yield from grow([0], 0)


def congruences_by_partition_filter(L):
    """Every partition of L with the substitution property, checked pair by
    pair in plain Python."""
    meet, join = L.meet.tolist(), L.join.tolist()
    n = L.n
    out = set()
    for p in set_partitions(n):
        ok = all(p[meet[a][c]] == p[meet[b][c]] and p[join[a][c]] == p[join[b][c]]
                 for a in range(n) for b in range(a + 1, n) if p[a] == p[b]
                 for c in range(n))
        if ok:
            out.add(Congruence.from_labels(p))
    return out


def boolean_triples_bruteforce(L):
    """Boolean triples found by evaluating the three defining equations."""
    m, j = L.meet.tolist(), L.join.tolist()
    return [(x, y, z) for x, y, z in itertools.product(range(L.n), repeat=3)
            if x == m[j[x][y]][j[x][z]] and y == m[j[y][x]][j[y][z]]
            and z == m[j[z][x]][j[z][y]]]


# -- shared corpora ---------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerated(lo, hi):
    return tuple((f"L{n}.{k}", L) for n in range(lo, hi + 1)
                 for k, L in enumerate(corpus.enumerate_lattices(n)))


@lru_cache(maxsize=None)
def diagonal_sweep():
    """Enumerated lattices of size 2..5 plus a few named ones, each with its
    Boolean-triple lattice."""
    items = list(enumerated(2, 5))
    items += [(name, corpus.named(name)) for name in ("M3", "N5", "B3", "M3xC2")]
    return tuple((name, L, build_m3hat(L)) for name, L in items)


@lru_cache(maxsize=None)
def sweep_reports():
    return tuple(verify_extension(T.diagonal) for _, _, T in diagonal_sweep())


def _fail_list(names, limit=5):
    shown = ", ".join(names[:limit])
    return shown + (" ..." if len(names) > limit else "")


# -- criteria -----------------------------------------------------------------------

def c01_m3_of_two_chain():
    C2 = corpus.chain(2)
    T = build_m3hat(C2)
    expected = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)}
    iso = is_isomorphic(T.lattice, corpus.m3())
    ok = len(T) == 5 and set(T.members) == expected and iso is not None
    return ok, f"{len(T)} members, isomorphic to M3: {'yes' if iso else 'no'}"


def c02_m3_of_three_chain():
    C3 = corpus.chain(3)
    T = build_m3hat(C3)
    # a chain's meet and join are min and max of the indices
    brute = [t for t in itertools.product(range(3), repeat=3)
             if all(t[i] == min(max(t[i], t[(i + 1) % 3]), max(t[i], t[(i + 2) % 3]))
                    for i in range(3))]
    ok = len(T) == 12 and T.members == sorted(brute)
    return ok, f"{len(T)} members, brute force {len(brute)}"


def c03_proper_congruence_preserving():
    bad = []
    cross = 0
    for (name, L, T), r in zip(diagonal_sweep(), sweep_reports()):
        if not (r.proper and r.congruence_preserving):
            bad.append(name)
        if len(T) <= 6:
            cross += 1
            if set(all_congruences(T.lattice)) != congruences_by_partition_filter(T.lattice):
                bad.append(name + "(oracle)")
    n = len(diagonal_sweep())
    return not bad, f"{n} lattices, {cross} cross-checked by partition filter" + (
        f"; failures: {_fail_list(bad)}" if bad else "")


def c04_extensive():
    bad = [name for (name, _, _), r in zip(diagonal_sweep(), sweep_reports()) if not r.extensive]
    return not bad, f"{len(diagonal_sweep())} lattices" + (
        f"; failures: {_fail_list(bad)}" if bad else "")


def c05_modular_iff_distributive():
    bad = [name for name, L, T in diagonal_sweep()
           if is_modular(T.lattice) != is_distributive(L)]
    T = build_m3hat(corpus.m3())
    idx = T.index_of
    o, a, b, c, i = range(5)
    expected = tuple(idx[t] for t in [(o, o, a), (o, c, a), (c, c, i), (i, i, i), (b, o, a)])
    witness = modularity_witness(T)
    K = T.lattice
    meet_ok = K.meet[idx[(c, c, i)], idx[(b, o, a)]] == idx[(o, o, a)]
    join_ok = K.join[idx[(o, c, a)], idx[(b, o, a)]] == idx[(i, i, i)]
    five_ok = witness == expected and is_pattern_copy(K, expected, N5)
    ok = not bad and bool(meet_ok) and bool(join_ok) and five_ok
    detail = (f"{len(diagonal_sweep())} lattices; M3 witness "
              + "{" + ",".join(T.render(x) for x in witness) + "}")
    if bad:
        detail += f"; failures: {_fail_list(bad)}"
    return ok, detail


def distributive_corpus():
    items = [(f"C{k}", corpus.chain(k)) for k in range(1, 7)]
    items += [("B2", corpus.boolean_lattice(2)), ("B3", corpus.boolean_lattice(3))]
    items += [("C2xC3", corpus.product(corpus.chain(2), corpus.chain(3))),
              ("C2xC4", corpus.product(corpus.chain(2), corpus.chain(4))),
              ("C3xC2", corpus.product(corpus.chain(3), corpus.chain(2)))]
    return items


def c06_schmidt():
    bad = []
    for name, D in distributive_corpus():
        checks = verify_schmidt(D)
        bad += [f"{name}:{k}" for k, v in checks.items() if not v]
    return not bad, f"{len(distributive_corpus())} distributive lattices" + (
        f"; failures: {_fail_list(bad)}" if bad else "")


def c07_s_poset_failure():
    parts = []
    found = False
    for name in ("M3", "N5"):
        w = m3_lattice_failure_witness(corpus.named(name))
        if w is None:
            parts.append(f"{name}: (S)-poset is a lattice")
        else:
            found = True
            parts.append(f"{name}: no bound for {w[0]} and {w[1]}")
    return found, "; ".join(parts)


def c08_ideal_extension():
    items = list(enumerated(2, 5))
    items += [(name, corpus.named(name)) for name in corpus.names()
              if 2 <= corpus.named(name).n <= 5]
    bad = []
    count = 0
    for name, L in items:
        for a in range(L.n):
            if a == L.top:
                continue
            count += 1
            r = ideal_extension(L, a).report
            if not (r.image_is_ideal and r.proper and r.congruence_preserving):
                bad.append(f"{name}@{L.labels[a]}")
    return not bad, f"{count} (lattice, element) cases" + (
        f"; failures: {_fail_list(bad)}" if bad else "")


def fano_semimodularity_witnesses(T):
    """For every triangle a, b, c of points (sides n = a v b, m = a v c,
    l = b v c) and the point p on none of the sides, check that <p,0,0> is
    an atom and that its join with <a,b,c> is <1,l,l>, two steps above
    <a,b,c> via <n,b,l>.  Returns (triangles checked, failures)."""
    P = T.base
    K = T.lattice
    idx = T.index_of
    o, one = P.bottom, P.top
    points = [x for x in range(P.n) if P.cover_matrix[o, x]]
    bottom = idx[(o, o, o)]
    checked, bad = 0, []
    for a, b, c in itertools.permutations(points, 3):
        if P.join[a, b] == P.join[a, c]:
            continue
        n, m, l = int(P.join[a, b]), int(P.join[a, c]), int(P.join[b, c])
        off = [p for p in points if not (P.leq[p, n] or P.leq[p, m] or P.leq[p, l])]
        if len(off) != 1:
            bad.append((a, b, c))
            continue
        p = off[0]
        checked += 1
        atom = idx[(p, o, o)]
        abc = idx[(a, b, c)]
        top = idx.get((one, l, l))
        mid = idx.get((n, b, l))
        ok = (K.cover_matrix[bottom, atom]
              and K.meet[atom, abc] == bottom
              and closure(P, (int(P.join[p, a]), b, c)) == (one, l, l)
              and top is not None and mid is not None
              and K.join[atom, abc] == top
              and K.leq[abc, mid] and K.leq[mid, top]
              and len({abc, mid, top}) == 3
              and not K.cover_matrix[abc, top])
        if not ok:
            bad.append((a, b, c))
    return checked, bad


def c09_fano_not_semimodular():
    P = corpus.fano()
    if P.n ** 3 > 4096:
        return False, "too many candidate triples"
    T = build_m3hat(P)
    semi = is_semimodular(T.lattice)
    checked, bad = fano_semimodularity_witnesses(T)
    ok = not semi and checked > 0 and not bad
    return ok, (f"|M3<Fano>| = {len(T)}, semimodular: {'yes' if semi else 'no'}, "
                f"{checked} triangle witnesses verified" + (f", {len(bad)} failed" if bad else ""))


def triple_property_checks(L):
    """Failed parts of the basic Boolean-triple properties for L."""
    n = L.n
    failed = []
    m, j, leq = L.meet, L.join, L.leq
    x, y, z = np.indices((n, n, n)).reshape(3, -1)
    boolean = boolean_mask(L)
    S = (m[x, y] == m[y, z]) & (m[y, z] == m[z, x])
    if (boolean & ~S).any():
        failed.append("boolean=>S")
    triples = list(zip(x.tolist(), y.tolist(), z.tolist()))
    if boolean_triples_bruteforce(L) != [t for t, b in zip(triples, boolean) if b]:
        failed.append("bruteforce")

    # Boolean iff some (u, v, w) gives it as (u^v, u^w, v^w)
    u, v, w = x, y, z
    r_codes = set(((m[u, v] * n + m[u, w]) * n + m[v, w]).tolist())
    b_codes = set(((x * n + y) * n + z)[boolean].tolist())
    if r_codes != b_codes:
        failed.append("R-representation")
    for t, is_b in zip(triples, boolean):
        r = witness_R(L, t)
        if (r is not None) != bool(is_b):
            failed.append("witness_R")
            break

    # closure: extensive, Boolean, idempotent, monotone, least
    cl = np.array([closure(L, t) for t in triples])
    if not (leq[x, cl[:, 0]] & leq[y, cl[:, 1]] & leq[z, cl[:, 2]]).all():
        failed.append("closure-extensive")
    codes = (cl[:, 0] * n + cl[:, 1]) * n + cl[:, 2]
    if not boolean[codes].all():
        failed.append("closure-boolean")
    if not np.array_equal(cl[codes], cl):
        failed.append("closure-idempotent")
    tle = leq[x[:, None], x[None, :]] & leq[y[:, None], y[None, :]] & leq[z[:, None], z[None, :]]
    cle = (leq[cl[:, 0][:, None], cl[:, 0][None, :]] & leq[cl[:, 1][:, None], cl[:, 1][None, :]]
           & leq[cl[:, 2][:, None], cl[:, 2][None, :]])
    if (tle & ~cle).any():
        failed.append("closure-monotone")
    # closure(t) <= every Boolean s >= t
    above_boolean = tle & boolean[None, :]
    cl_le_s = (leq[cl[:, 0][:, None], x[None, :]] & leq[cl[:, 1][:, None], y[None, :]]
               & leq[cl[:, 2][:, None], z[None, :]])
    if (above_boolean & ~cl_le_s).any():
        failed.append("closure-least")

    T = build_m3hat(L)
    # componentwise meet of Boolean triples is Boolean (build_m3hat raises otherwise)
    e = zero_embedding(T)
    sub, _ = sublattice(T.lattice, e.image())
    if is_isomorphic(sub, L) is None:
        failed.append("zero-copy")
    if n > 1:
        span = spanning_m3(T)
        K = T.lattice
        if not (is_pattern_copy(K, span, M3) and span[0] == K.bottom and span[4] == K.top):
            failed.append("spanning-M3")

    for t in T.members:
        case = classify(L, t)
        if case.reconstruct(L) != t:
            failed.append("classify-reconstruct")
            break
        if _matching_cases(L, t) != [case.kind]:
            failed.append("classify-exclusive")
            break
    return failed


def _matching_cases(L, t):
    """Which of the four shapes t has, evaluated straight from their
    descriptions."""
    m, j, leq = L.meet, L.join, L.leq
    vals = set(t)
    x, y, z = t
    out = []
    if len(vals) == 1:
        out.append(DIAGONAL)
    if len(vals) == 2:
        lo, hi = sorted(vals, key=lambda v: leq[:, v].sum())
        if leq[lo, hi] and lo != hi:
            out.append(TWO_VALUES)
    comparable = any(leq[p, q] for p in t for q in t if p != q)
    if len(vals) == 3 and comparable:
        forms = []
        for a, b in itertools.permutations(t, 2):
            if not leq[a, b] and not leq[b, a]:
                mab = int(m[a, b])
                forms += [(a, b, mab), (a, mab, b), (mab, a, b)]
        if t in forms:
            out.append(COMPARABLE_PAIR)
    if len(vals) == 3 and not comparable:
        bot = int(m[m[x, y], z])
        top = int(j[j[x, y], z])
        cube = {bot, x, y, z, int(j[x, y]), int(j[x, z]), int(j[y, z]), top}
        closed = all(m[p, q] in cube and j[p, q] in cube for p in cube for q in cube)
        atoms = {q for q in cube if q != bot
                 and all(not (leq[r, q] and r != q and r != bot) for r in cube)}
        if len(cube) == 8 and closed and atoms == {x, y, z}:
            out.append(ATOMS_OF_B8)
    return out


def c10_basic_properties():
    items = list(enumerated(1, 5))
    bad = []
    for name, L in items:
        bad += [f"{name}:{f}" for f in triple_property_checks(L)]
    return not bad, f"{len(items)} lattices" + (f"; failures: {_fail_list(bad)}" if bad else "")


def c11_congruence_oracle():
    items = list(enumerated(1, 6))
    items += [(name, corpus.named(name)) for name in corpus.names() if corpus.named(name).n <= 6]
    bad = [name for name, L in items
           if set(all_congruences(L)) != congruences_by_partition_filter(L)]
    counts = {name: len(congruences_by_partition_filter(corpus.named(name)))
              for name in ("C3", "M3", "N5")}
    engine = {name: len(all_congruences(corpus.named(name))) for name in counts}
    ok = not bad and counts == engine == {"C3": 4, "M3": 2, "N5": 5}
    return ok, (f"{len(items)} lattices; |Con| C3={engine['C3']} M3={engine['M3']} "
                f"N5={engine['N5']}" + (f"; failures: {_fail_list(bad)}" if bad else ""))


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    check: object
    budget: float   # seconds


CRITERIA = [
    Criterion(1, "Boolean triples of the 2-chain form M3", c01_m3_of_two_chain, 1),
    Criterion(2, "Boolean triples of the 3-chain: 12 members", c02_m3_of_three_chain, 1),
    Criterion(3, "diagonal extension is proper and congruence-preserving",
              c03_proper_congruence_preserving, 300),
    Criterion(4, "diagonal extension is extensive", c04_extensive, 300),
    Criterion(5, "triple lattice modular iff base distributive; explicit N5",
              c05_modular_iff_distributive, 60),
    Criterion(6, "Schmidt M3[D] for distributive D", c06_schmidt, 120),
    Criterion(7, "(S)-triple poset fails to be a lattice for M3 or N5", c07_s_poset_failure, 60),
    Criterion(8, "glued extension keeps L as an ideal", c08_ideal_extension, 300),
    Criterion(9, "triple lattice of the Fano plane is not semimodular",
              c09_fano_not_semimodular, 120),
    Criterion(10, "basic properties of Boolean triples", c10_basic_properties, 300),
    Criterion(11, "congruence engine matches partition filter", c11_congruence_oracle, 120),
]


@dataclass(frozen=True)
class Result:
    criterion: Criterion
    ok: bool
    detail: str
    seconds: float

    def line(self):
        c = self.criterion
        status = "PASS" if self.ok else "FAIL"
        return f"{c.number:>2}  {status}  {c.title}  [{self.seconds:.1f}s]  {self.detail}"


def run(criterion):
    start = time.perf_counter()
    try:
        ok, detail = criterion.check()
    except Exception as exc:  # reported as a failed criterion
        ok, detail = False, f"error: {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if seconds > criterion.budget:
        ok = False
        detail += f"; over time budget {criterion.budget}s"
    return Result(criterion, ok, detail, seconds)


def run_all(numbers=None):
    return [run(c) for c in CRITERIA if numbers is None or c.number in numbers]


def by_number(number):
    return next(c for c in CRITERIA if c.number == number)
