"""Command-line front end.

Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 size limit.
"""

import argparse
import os
import sys

from . import corpus, suite
from .congruence import DEFAULT_MAX_CONGRUENCES, all_congruences
from .embedding import Embedding
from .errors import LatticeError, NotDistributive, SizeLimitExceeded
from .extensions import glue, ideal_extension, verify_extension
from .formats import dump_lattice, read_lattice, to_dot
from .lattice import (M3, N5, find_sublattice, is_distributive, is_isomorphic, is_modular,
                      semimodular_failure, sublattice)
from .schmidt import build_m3d
from .triples import DEFAULT_MAX_TRIPLES, build_m3hat, classify, modularity_witness

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


def _yes(flag):
    return "yes" if flag else "no"


def load(source):
    if source.startswith("@"):
        return corpus.named(source[1:])
    return read_lattice(source)


def _elements(L, spec):
    return frozenset(L.element(tok) for tok in spec.split(","))


def _construct(L, kind, args):
    """Apply a construction; returns (lattice, embedding of L, triple lattice or None)."""
    if kind == "none":
        return L, Embedding.identity(L), None
    if kind == "m3hat":
        T = build_m3hat(L, args.max_triples)
        return T.lattice, T.diagonal, T
    if kind == "m3d":
        S = build_m3d(L, args.max_triples)
        return S.lattice, S.embedding, None
    if kind == "ideal-ext":
        a = L.element(args.at) if args.at is not None else L.bottom
        ie = ideal_extension(L, a, args.max_triples, args.max_congruences, verify=False)
        return ie.lattice, ie.embedding, None
    raise LatticeError(f"unknown construction {kind!r}")


def _render(K, elems):
    return "{" + ",".join(K.labels[x] for x in elems) + "}"


# -- verbs -----------------------------------------------------------------------

def cmd_show(args):
    L = load(args.input)
    cons = all_congruences(L, args.max_congruences)
    print(f"elements: {L.n}")
    print(f"bottom: {L.labels[L.bottom]}")
    print(f"top: {L.labels[L.top]}")
    print(f"distributive: {_yes(is_distributive(L))}")
    print(f"modular: {_yes(is_modular(L))}")
    print(f"semimodular: {_yes(semimodular_failure(L) is None)}")
    print(f"congruences: {len(cons)}")
    print("covers:")
    for a, b in L.covers():
        print(f"  {L.labels[a]} < {L.labels[b]}")
    return EXIT_OK


def _emit(K, args, comments=(), highlight=()):
    text = to_dot(K, highlight) if getattr(args, "dot", False) else dump_lattice(K, comments)
    if getattr(args, "output", None):
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
        for c in comments:
            print(f"# {c}")
    else:
        sys.stdout.write(text)


def cmd_m3hat(args):
    L = load(args.input)
    T = build_m3hat(L, args.max_triples)
    iso = is_isomorphic(T.lattice, corpus.m3()) is not None
    _emit(T.lattice, args, [f"members: {len(T)}", f"isomorphic to M3: {_yes(iso)}"],
          T.diagonal.image())
    return EXIT_OK


def cmd_m3d(args):
    L = load(args.input)
    try:
        S = build_m3d(L, args.max_triples)
    except NotDistributive as exc:
        print(f"m3d: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(S.lattice, args, [f"members: {S.lattice.n}"], S.embedding.image())
    return EXIT_OK


def cmd_con(args):
    L = load(args.input)
    cons = all_congruences(L, args.max_congruences)
    if args.emit == "list":
        print(f"# {len(cons)} congruences")
        for c in cons:
            print(c)
    elif args.emit == "text":
        sys.stdout.write(dump_lattice(cons.lattice, [f"{len(cons)} congruences"]))
    else:
        sys.stdout.write(to_dot(cons.lattice, name="congruences"))
    return EXIT_OK


def cmd_classify(args):
    L = load(args.input)
    T = build_m3hat(L, args.max_triples)
    for i, t in enumerate(T.members):
        case = classify(L, t)
        if case.kind == "AtomsOfB8":
            extra = "B=" + _render(L, case.cube)
        elif case.kind == "Diagonal":
            extra = f"a={L.labels[case.a]}"
        else:
            extra = f"a={L.labels[case.a]} b={L.labels[case.b]} pattern={case.pattern}"
        print(f"{T.render(i)} {case.kind} {extra}")
    return EXIT_OK


def cmd_verify(args):
    L = load(args.input)
    kind = args.property
    construction = args.construction
    if construction is None:
        construction = {"cpe": "m3hat", "extensive": "m3hat", "ideal": "ideal-ext"}.get(kind, "none")
    K, e, T = _construct(L, construction, args)

    if kind in ("cpe", "extensive", "ideal"):
        r = verify_extension(e, args.max_congruences)
        shown = {"cpe": ("proper", "congruence_preserving", "extensive"),
                 "extensive": ("extensive",),
                 "ideal": ("image_is_ideal", "proper", "congruence_preserving")}[kind]
        print(r.summary(shown))
        if args.full:
            sys.stdout.write(r.to_text())
        else:
            for v in shown:
                if v in r.failure_witness:
                    print(f"witness.{v}: {r.failure_witness[v]}")
        needed = {"cpe": ("proper", "congruence_preserving"), "extensive": ("extensive",),
                  "ideal": shown}[kind]
        return EXIT_OK if r.ok(*needed) else EXIT_FAILED

    if kind == "modular":
        ok = is_modular(K)
        if ok:
            print("modular=yes")
            return EXIT_OK
        w = modularity_witness(T) if T is not None else find_sublattice(K, N5)
        print(f"modular=no witness=N5{_render(K, w)}")
        return EXIT_FAILED
    if kind == "distributive":
        if is_distributive(K):
            print("distributive=yes")
            return EXIT_OK
        w = find_sublattice(K, N5)
        pattern = N5
        if w is None:
            w, pattern = find_sublattice(K, M3), M3
        print(f"distributive=no witness={pattern}{_render(K, w)}")
        return EXIT_FAILED
    if kind == "semimodular":
        w = semimodular_failure(K)
        if w is None:
            print("semimodular=yes")
            return EXIT_OK
        a, b = w
        print(f"semimodular=no witness=a={K.labels[a]},b={K.labels[b]}")
        return EXIT_FAILED
    raise LatticeError(f"unknown property {kind!r}")


def cmd_glue(args):
    L, A = load(args.first), load(args.second)
    F, I = _elements(L, args.filter), _elements(A, args.ideal)
    sf, ef = sublattice(L, F)
    si, ei = sublattice(A, I)
    f = is_isomorphic(sf, si)
    if f is None:
        raise LatticeError("the filter and the ideal are not isomorphic")
    g = glue(L, F, A, I, {ef[x]: ei[f[x]] for x in range(sf.n)})
    _emit(g.lattice, args, [f"glued: {L.n} + {A.n} - {len(F)} = {g.lattice.n} elements"])
    return EXIT_OK


def cmd_ideal_ext(args):
    L = load(args.input)
    a = L.element(args.at)
    ie = ideal_extension(L, a, args.max_triples, args.max_congruences)
    r = ie.report
    _emit(ie.lattice, args, [r.summary(("image_is_ideal", "proper", "congruence_preserving"))],
          ie.embedding.image())
    return EXIT_OK if r.ok("image_is_ideal", "proper", "congruence_preserving") else EXIT_FAILED


def cmd_export_dot(args):
    L = load(args.input)
    K, e, _ = _construct(L, args.construction, args)
    sys.stdout.write(to_dot(K, e.image() if args.construction != "none" else ()))
    return EXIT_OK


def cmd_suite(args):
    numbers = set(args.only) if args.only else None
    results = []
    for c in suite.CRITERIA:
        if numbers is not None and c.number not in numbers:
            continue
        r = suite.run(c)
        results.append(r)
        print(r.line(), flush=True)
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if passed == len(results) else EXIT_FAILED


def cmd_corpus(args):
    if args.action == "list":
        for entry in corpus.entries():
            print(f"{entry.name} {entry.lattice.n}")
        return EXIT_OK
    if not args.name:
        raise LatticeError("corpus emit needs a name")
    sys.stdout.write(dump_lattice(corpus.named(args.name)))
    return EXIT_OK


# -- argument parsing --------------------------------------------------------------

def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


def build_parser():
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-triples", type=int,
                      default=_env_int("CPEXT_MAX_TRIPLES", DEFAULT_MAX_TRIPLES))
    caps.add_argument("--max-congruences", type=int,
                      default=_env_int("CPEXT_MAX_CONGRUENCES", DEFAULT_MAX_CONGRUENCES))

    p = argparse.ArgumentParser(prog="cpext", description="Boolean-triple extensions of finite lattices.")
    sub = p.add_subparsers(dest="verb", required=True)
    inp = "lattice file or @name from the corpus"

    s = sub.add_parser("show", parents=[caps], help="lattice statistics and covers")
    s.add_argument("input", help=inp)
    s.set_defaults(func=cmd_show)

    for verb, func, help_ in [("m3hat", cmd_m3hat, "emit the lattice of Boolean triples"),
                              ("m3d", cmd_m3d, "emit M3[D] for distributive D")]:
        s = sub.add_parser(verb, parents=[caps], help=help_)
        s.add_argument("input", help=inp)
        s.add_argument("-o", "--output")
        s.add_argument("--dot", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("con", parents=[caps], help="list congruences")
    s.add_argument("input", help=inp)
    s.add_argument("--emit", choices=["list", "text", "dot"], default="list")
    s.set_defaults(func=cmd_con)

    s = sub.add_parser("classify", parents=[caps], help="classify every Boolean triple")
    s.add_argument("input", help=inp)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[caps], help="check a property and print the verdict")
    s.add_argument("property", choices=["cpe", "extensive", "ideal", "modular",
                                        "distributive", "semimodular"])
    s.add_argument("input", help=inp)
    s.add_argument("--construction", choices=["none", "m3hat", "m3d", "ideal-ext"])
    s.add_argument("--at", help="element for ideal-ext (default: bottom)")
    s.add_argument("--full", action="store_true", help="print the whole report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("glue", parents=[caps], help="glue a filter of A to an ideal of B")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--filter", required=True, help="comma-separated elements of A")
    s.add_argument("--ideal", required=True, help="comma-separated elements of B")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("ideal-ext", parents=[caps], help="extension keeping L as an ideal")
    s.add_argument("input", help=inp)
    s.add_argument("--at", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_ideal_ext)

    s = sub.add_parser("export-dot", parents=[caps], help="Hasse diagram in DOT")
    s.add_argument("input", help=inp)
    s.add_argument("--construction", choices=["none", "m3hat", "m3d", "ideal-ext"], default="none")
    s.add_argument("--at")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("suite", help="run every acceptance criterion")
    s.add_argument("--only", type=int, nargs="*")
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("corpus", help="named lattices")
    s.add_argument("action", choices=["list", "emit"])
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_corpus)
    return p


def run(argv):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"{args.verb}: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (LatticeError, OSError) as exc:
        print(f"{args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
