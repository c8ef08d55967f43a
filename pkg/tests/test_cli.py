import subprocess
import sys

import pytest

from cpext.cli import main
from cpext.formats import parse_lattice, read_lattice


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_show(capsys):
    rc, out, _ = run(capsys, "show", "@N5")
    assert rc == 0
    assert "elements: 5" in out and "modular: no" in out and "congruences: 5" in out


def test_m3hat_of_two_chain(capsys):
    rc, out, _ = run(capsys, "m3hat", "@C2")
    assert rc == 0
    assert "# members: 5" in out and "# isomorphic to M3: yes" in out
    body = "\n".join(ln for ln in out.splitlines() if not ln.startswith("#")) + "\n"
    assert parse_lattice(body).n == 5


def test_m3hat_to_file(capsys, tmp_path):
    dest = tmp_path / "m.lat"
    rc, _, _ = run(capsys, "m3hat", "@C3", "-o", str(dest))
    assert rc == 0 and read_lattice(dest).n == 12


def test_m3d_rejects_non_distributive(capsys):
    rc, _, err = run(capsys, "m3d", "@N5")
    assert rc != 0 and err


def test_verify_cpe(capsys):
    rc, out, _ = run(capsys, "verify", "cpe", "@M3", "--construction", "m3hat")
    assert rc == 0
    assert out.splitlines()[0] == "proper=yes congruence_preserving=yes extensive=yes"


def test_verify_cpe_failure(capsys, tmp_path):
    # the identity is not proper
    rc, out, _ = run(capsys, "verify", "cpe", "@C3", "--construction", "none")
    assert rc == 1 and "proper=no" in out


def test_verify_modular(capsys):
    rc, out, _ = run(capsys, "verify", "modular", "@M3", "--construction", "m3hat")
    assert rc == 1
    assert out.strip() == "modular=no witness=N5{<o,o,a>,<o,c,a>,<c,c,i>,<i,i,i>,<b,o,a>}"
    rc, out, _ = run(capsys, "verify", "modular", "@B2", "--construction", "m3hat")
    assert rc == 0 and out.strip() == "modular=yes"


def test_verify_semimodular_fano(capsys):
    rc, out, _ = run(capsys, "verify", "semimodular", "@Fano", "--construction", "m3hat")
    assert rc == 1 and out.startswith("semimodular=no witness=")


def test_verify_ideal_full(capsys):
    rc, out, _ = run(capsys, "verify", "ideal", "@N5", "--full")
    assert rc == 0 and "con_sizes: 5 5" in out


def test_con(capsys):
    rc, out, _ = run(capsys, "con", "@N5")
    assert rc == 0 and out.startswith("# 5 congruences")
    rc, out, _ = run(capsys, "con", "@N5", "--emit", "dot")
    assert rc == 0 and out.startswith("digraph")


def test_classify(capsys):
    rc, out, _ = run(capsys, "classify", "@C2")
    assert rc == 0 and len(out.splitlines()) == 5 and "TwoValues" in out


def test_glue(capsys):
    rc, out, _ = run(capsys, "glue", "@C2", "@C2", "--filter", "1", "--ideal", "0")
    assert rc == 0 and "glued: 2 + 2 - 1 = 3 elements" in out


def test_glue_mismatch(capsys):
    rc, _, err = run(capsys, "glue", "@C3", "@M3", "--filter", "1,2", "--ideal", "o,a,b")
    assert rc == 2 and err


def test_ideal_ext(capsys):
    rc, out, _ = run(capsys, "ideal-ext", "@C2", "--at", "0")
    assert rc == 0 and "image_is_ideal=yes proper=yes congruence_preserving=yes" in out


def test_export_dot(capsys):
    rc, out, _ = run(capsys, "export-dot", "@M3", "--construction", "m3hat")
    assert rc == 0 and "fillcolor=lightgrey" in out


def test_corpus(capsys):
    rc, out, _ = run(capsys, "corpus", "list")
    assert rc == 0 and "Fano 16" in out
    rc, out, _ = run(capsys, "corpus", "emit", "M3")
    assert rc == 0 and parse_lattice(out).n == 5
    rc, _, _ = run(capsys, "corpus", "emit")
    assert rc == 2


def test_errors(capsys, tmp_path):
    rc, _, err = run(capsys, "show", "@Nope")
    assert rc == 2 and "Nope" in err
    rc, _, _ = run(capsys, "show", str(tmp_path / "missing.lat"))
    assert rc == 2
    bad = tmp_path / "bad.lat"
    bad.write_text("lattice 2\ncover 0  1\n")
    rc, _, _ = run(capsys, "show", str(bad))
    assert rc == 2
    rc, _, _ = run(capsys, "bogus")
    assert rc == 2


def test_size_limits(capsys, monkeypatch):
    rc, _, err = run(capsys, "m3hat", "@C6", "--max-triples", "100")
    assert rc == 3 and err
    rc, _, _ = run(capsys, "con", "@B3", "--max-congruences", "3")
    assert rc == 3
    monkeypatch.setenv("CPEXT_MAX_TRIPLES", "50")
    rc, _, _ = run(capsys, "m3hat", "@C5")
    assert rc == 3


def test_suite_subset(capsys):
    rc, out, _ = run(capsys, "suite", "--only", "1", "2")
    assert rc == 0 and out.strip().endswith("2/2 criteria passed")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "cpext", "show", "@C2"], capture_output=True, text=True)
    assert p.returncode == 0 and "elements: 2" in p.stdout
