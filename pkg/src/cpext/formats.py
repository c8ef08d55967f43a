"""Plain-text lattice files and Graphviz DOT output.

Text format, one lattice per file::

    # comment
    lattice 3
    cover 0 1
    cover 1 2
    label 1 m
"""

from .errors import FormatError
from .lattice import FiniteLattice


def parse_lattice(text):
    n = None
    covers = []
    labels = {}
    for lineno, line in enumerate(text.split("\n"), 1):
        if line.endswith("\r"):
            raise FormatError(f"line {lineno}: CR line ending")
        if not line or line.startswith("#"):
            continue
        tokens = line.split(" ")
        if "" in tokens:
            raise FormatError(f"line {lineno}: tokens must be separated by single spaces")
        head = tokens[0]
        try:
            if head == "lattice" and len(tokens) == 2:
                if n is not None:
                    raise FormatError(f"line {lineno}: duplicate lattice line")
                n = int(tokens[1])
            elif n is None:
                raise FormatError(f"line {lineno}: expected 'lattice <n>' first")
            elif head == "cover" and len(tokens) == 3:
                covers.append((int(tokens[1]), int(tokens[2])))
            elif head == "label" and len(tokens) == 3:
                labels[int(tokens[1])] = tokens[2]
            else:
                raise FormatError(f"line {lineno}: cannot parse {line!r}")
        except ValueError:
            raise FormatError(f"line {lineno}: bad integer in {line!r}") from None
    if n is None:
        raise FormatError("missing 'lattice <n>' line")
    if n < 1:
        raise FormatError("a lattice needs at least one element")
    if any(not 0 <= i < n for i in labels):
        raise FormatError("label index out of range")
    names = [labels.get(i, str(i)) for i in range(n)]
    return FiniteLattice.from_covers(n, covers, names)


def read_lattice(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise FormatError(f"{path}: not ASCII") from None
    return parse_lattice(text)


def dump_lattice(L, comments=()):
    lines = [f"# {c}" for c in comments]
    lines.append(f"lattice {L.n}")
    lines += [f"cover {a} {b}" for a, b in L.covers()]
    lines += [f"label {i} {s}" for i, s in enumerate(L.labels) if s != str(i)]
    return "\n".join(lines) + "\n"


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(L, highlight=(), name="lattice"):
    """Hasse diagram, bottom at the bottom, one rank per height."""
    highlight = set(highlight)
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in range(L.n):
        extra = ", style=filled, fillcolor=lightgrey, shape=box" if x in highlight else ""
        out.append(f"  n{x} [label={_quote(L.labels[x])}{extra}];")
    for a, b in L.covers():
        out.append(f"  n{a} -> n{b} [arrowhead=none];")
    ranks = {}
    for x in range(L.n):
        ranks.setdefault(int(L.heights[x]), []).append(x)
    for h in sorted(ranks):
        out.append("  { rank=same; " + " ".join(f"n{x};" for x in ranks[h]) + " }")
    out.append("}")
    return "\n".join(out) + "\n"
