"""Exit codes and file formats of the command-line surface."""

import pytest

from mub.cli import main
from mub.bigraph import parse_graph
from mub.families import FamilyId, generate
from mub.representation import parse_representation, validate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_writes_graph_text(tmp_path, capsys):
    out = tmp_path / "g.graph"
    code, _, _ = run(capsys, "gen", "--family", "Kfam", "--i", "1", "--j", "2",
                     "--primed", "-o", str(out))
    assert code == 0
    assert parse_graph(out.read_text()) == generate(FamilyId("Kfam", 1, 2, primed=True))


def test_gen_rejects_unsupported_tilde(capsys):
    code, _, err = run(capsys, "gen", "--family", "L", "--i", "1", "--j", "1", "--tilde")
    assert code == 64
    assert "tilde" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen"])
    assert exc.value.code == 64


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("X a\nY b\nE a a\n")
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--graph", str(bad)])
    assert exc.value.code == 64
    err = capsys.readouterr().err
    assert "line 3" in err


def test_recognize_exit_codes_and_witness(tmp_path, capsys):
    g = tmp_path / "h2.graph"
    run(capsys, "gen", "--family", "H2", "-o", str(g))
    wit = tmp_path / "h2.rep"
    code, out, _ = run(capsys, "recognize", "--graph", str(g), "--emit-rep", str(wit))
    assert code == 0 and "status: SAT" in out
    rep = parse_representation(wit.read_text())
    assert validate(generate(FamilyId("H2")), rep).valid

    f2 = tmp_path / "f2.graph"
    run(capsys, "gen", "--family", "F2", "-o", str(f2))
    code, out, _ = run(capsys, "recognize", "--graph", str(f2))
    assert code == 1 and "status: UNSAT" in out

    big = tmp_path / "big.graph"
    run(capsys, "gen", "--family", "Kfam", "--i", "2", "--j", "2", "--primed", "-o", str(big))
    code, out, _ = run(capsys, "recognize", "--graph", str(big), "--budget-nodes", "2")
    assert code == 2 and "BudgetExceeded" in out


def test_scan_exit_codes(tmp_path, capsys):
    h1 = tmp_path / "h1.graph"
    run(capsys, "gen", "--family", "H1", "-o", str(h1))
    code, out, _ = run(capsys, "scan", "--graph", str(h1))
    assert code == 0 and "clean" in out

    f2 = tmp_path / "f2.graph"
    run(capsys, "gen", "--family", "F2", "-o", str(f2))
    code, out, _ = run(capsys, "scan", "--graph", str(f2))
    assert code == 3 and "hit: F2" in out


def test_validate_and_render(tmp_path, capsys):
    code, _, _ = run(capsys, "fixtures", "dump", "--id", "H1", "-o", str(tmp_path / "h1"))
    assert code == 0
    code, out, _ = run(capsys, "validate", "--graph", str(tmp_path / "h1.graph"),
                       "--rep", str(tmp_path / "h1.rep"))
    assert code == 0 and "valid: True" in out

    code, out, _ = run(capsys, "render", "--rep", str(tmp_path / "h1.rep"))
    assert code == 0
    assert "(" in out and "[" in out and "=" in out

    svg = tmp_path / "h1.svg"
    code, _, _ = run(capsys, "render", "--rep", str(tmp_path / "h1.rep"),
                     "--format", "svg", "-o", str(svg))
    assert code == 0 and svg.read_text().startswith("<svg")


def test_validate_detects_breakage(tmp_path, capsys):
    run(capsys, "fixtures", "dump", "--id", "H1", "-o", str(tmp_path / "h1"))
    rep = (tmp_path / "h1.rep").read_text().replace("x3 C 8 9 C", "x3 C 20 21 C")
    (tmp_path / "h1b.rep").write_text(rep)
    code, out, _ = run(capsys, "validate", "--graph", str(tmp_path / "h1.graph"),
                       "--rep", str(tmp_path / "h1b.rep"))
    assert code == 1 and "missing edge" in out


def test_fixture_dump_variant(tmp_path, capsys):
    code, out, _ = run(capsys, "fixtures", "dump", "--id", "Pp", "--i", "2",
                       "--variant", "half_open")
    assert code == 0
    assert "v' C 2 3 O" in out


def test_repair_cli(tmp_path, capsys):
    (tmp_path / "g.graph").write_text("X x x'\nY y1 y2 y3\nE x y1\nE x y2\nE x y3\nE x' y2\n")
    (tmp_path / "g.rep").write_text(
        "y1 C 0 1 C\ny2 C 5/2 9/2 C\ny3 C 4 5 C\nx C 1 4 C\nx' C 21/10 29/10 C\n"
    )
    out_path = tmp_path / "fixed.rep"
    code, _, _ = run(capsys, "repair", "--graph", str(tmp_path / "g.graph"),
                     "--rep", str(tmp_path / "g.rep"), "-o", str(out_path))
    assert code == 0
    assert "x' O 1 4 O" in out_path.read_text()


def test_enumerate_small_and_bound(tmp_path, capsys):
    report = tmp_path / "r.txt"
    code, out, _ = run(capsys, "enumerate", "--max-n", "4", "--report", str(report),
                       "--checkpoint", str(tmp_path / "ck"))
    assert code == 0
    assert "disagreements=0" in out
    lines = report.read_text().splitlines()
    assert sum(1 for ln in lines if ln.startswith("n=4")) == 3
    assert all("agree=yes" in ln for ln in lines if ln.startswith("n="))
    # checkpoints make the rerun cheap and identical
    code2, out2, _ = run(capsys, "enumerate", "--max-n", "4", "--report", str(report),
                         "--checkpoint", str(tmp_path / "ck"))
    assert code2 == 0 and out2 == out

    code, _, err = run(capsys, "enumerate", "--max-n", "9")
    assert code == 64 and "safety bound" in err
