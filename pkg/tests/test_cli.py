"""End-to-end runs of the command-line interface, in process via main()."""
from __future__ import annotations

import json

import pytest

from sgx.cli import main
from sgx.semigroup import load_semigroup
from sgx.verify import EXPECTED_M35_BLOCK


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


# -- make ---------------------------------------------------------------------


def test_make_cyclic_prints_json(capsys):
    rc, out, err = run(capsys, "make", "cyclic", "--n", "3")
    assert rc == 0
    data = json.loads(out)
    assert data["order"] == 3 and data["table"][1][2] == 0
    assert "cyclic(3): order 3" in err


def test_make_writes_file(capsys, tmp_path):
    dest = tmp_path / "m.json"
    rc, out, _ = run(capsys, "make", "monogenic", "--n", "3", "--m", "5", "-o", str(dest))
    assert rc == 0 and f"monogenic(3,5): order 4 -> {dest}" in out
    assert load_semigroup(dest).order == 4


def test_make_compound_families(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "make", "cyclic", "--n", "2", "-o", str(a))[0] == 0
    assert run(capsys, "make", "semilattice", "--n", "2", "-o", str(b))[0] == 0
    rc, out, _ = run(capsys, "make", "ordered-union", str(a), str(b))
    assert rc == 0 and json.loads(out)["order"] == 4
    rc, out, _ = run(capsys, "make", "product", "c2", "l2")
    assert rc == 0 and json.loads(out)["order"] == 4
    rc, out, _ = run(capsys, "make", "bouquet", "l2", "l2")
    assert rc == 0 and json.loads(out)["order"] == 3  # zeros glued


def test_make_from_table_inline(capsys):
    rc, out, _ = run(capsys, "make", "from-table", "[[0,1],[1,0]]", "--names", "e,g")
    assert rc == 0
    data = json.loads(out)
    assert data["names"] == ["e", "g"]


def test_make_from_table_rejects_nonassociative(capsys):
    rc, _, err = run(capsys, "make", "from-table", "[[0,1],[0,0]]")
    assert rc == 2 and err.startswith("error:")


# -- analyze ------------------------------------------------------------------


def test_analyze_text_report(capsys):
    rc, out, _ = run(capsys, "analyze", "m35")
    assert rc == 0
    assert "m35  order=4" in out
    assert "|maximal_linked|=12" in out
    assert "comm=NO" in out and "supercomm=yes" in out
    assert "classification" not in out  # not regular, no tag


def test_analyze_json_is_deterministic(capsys):
    rc1, out1, _ = run(capsys, "analyze", "c2c2-ordered", "--json")
    rc2, out2, _ = run(capsys, "analyze", "c2c2-ordered", "--json")
    assert rc1 == rc2 == 0 and out1 == out2
    d = json.loads(out1)
    assert d["spaces"]["maximal_linked"]["commutative"] is False


def test_analyze_witness_and_space_selection(capsys):
    rc, out, _ = run(capsys, "analyze", "c2c2-ordered", "--spaces", "lambda", "--witness")
    assert rc == 0
    assert "witness" in out and "separated by" in out
    assert "|filters|" not in out


def test_analyze_writes_json_file(capsys, tmp_path):
    dest = tmp_path / "r.json"
    rc, out, _ = run(capsys, "analyze", "l3", "--spaces", "phi,n2", "-o", str(dest))
    assert rc == 0 and "classification: L3" in out
    d = json.loads(dest.read_text())
    assert set(d["spaces"]) == {"filters", "linked"}


def test_analyze_rejects_bad_inputs(capsys):
    assert run(capsys, "analyze", "no-such-semigroup")[0] == 2
    assert run(capsys, "analyze", "c2", "--spaces", "galaxy")[0] == 2
    assert run(capsys, "analyze", "c2", "--check", "associativity")[0] == 2


# -- cayley -------------------------------------------------------------------


def test_cayley_m35_block_rows(capsys):
    rc, out, _ = run(capsys, "cayley", "m35")
    assert rc == 0
    lines = out.splitlines()
    head = lines[0].split()
    assert head == ["*", "1", "2", "3", "4", "△1", "△2", "△3", "△4", "□1", "□2", "□3", "□4"]
    rows = {ln.split()[0]: ln.split()[1:] for ln in lines[1:]}
    for label, expected in EXPECTED_M35_BLOCK.items():
        assert tuple(rows[label][4:]) == expected, label


def test_cayley_filters_uses_names_and_triangle(capsys):
    rc, out, _ = run(capsys, "cayley", "c2", "--space", "filters")
    assert rc == 0
    lines = out.splitlines()
    # two principal filters carry element names; the lone extra member prints △
    assert lines[0].split() == ["*", "e", "a", "△"]
    assert lines[1].split() == ["e", "e", "a", "△"]


def test_cayley_too_large(capsys):
    rc, _, err = run(capsys, "cayley", "l2", "--space", "upsilon")
    assert rc == 0  # ground 2 is fine
    rc, _, err = run(capsys, "analyze", "c2", "--spaces", "lambda")
    assert rc == 0


# -- enumerate ----------------------------------------------------------------


def test_enumerate_counts(capsys):
    for kind, n, want in (
        ("lambda", 5, "81"),
        ("filters", 4, "15"),
        ("upsilon", 4, "166"),
        ("linked", 4, "80"),
        ("principal", 6, "6"),
    ):
        rc, out, _ = run(capsys, "enumerate", kind, str(n), "--count-only")
        assert rc == 0 and out.strip() == want, (kind, n)


def test_enumerate_listing(capsys):
    rc, out, _ = run(capsys, "enumerate", "filters", "3")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "filters(3): 7 members"
    assert len(lines) == 8 and lines[1] == "⟨{0}⟩"


def test_enumerate_errors(capsys):
    rc, _, err = run(capsys, "enumerate", "galaxy", "3")
    assert rc == 2 and "unknown kind" in err
    rc, _, err = run(capsys, "enumerate", "upsilon", "7")
    assert rc == 2 and "7" in err


# -- verify -------------------------------------------------------------------


def test_verify_tables_suite(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "tables")
    assert rc == 0
    assert "[PASS]" in out and out.splitlines()[-1].endswith("checks passed")


def test_verify_respects_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("SGX_THREADS", "2")
    rc, out, _ = run(capsys, "verify", "--suite", "tables")
    assert rc == 0
    monkeypatch.setenv("SGX_THREADS", "0")
    rc, _, err = run(capsys, "verify", "--suite", "tables")
    assert rc == 2 and "SGX_THREADS" in err
    monkeypatch.setenv("SGX_THREADS", "many")
    assert run(capsys, "verify", "--suite", "tables")[0] == 2
