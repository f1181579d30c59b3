"""Command-line interface: subcommands, formats, exit codes, determinism."""

import io

import pytest

from superbialg.cli import run_command
from superbialg.parser import parse_text


def run(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out=out)
    return code, out.getvalue()


def records(text):
    rows = []
    for line in text.splitlines():
        if line.startswith("entry="):
            fields = dict(part.split("=", 1) for part in line.split()
                          if "=" in part)
            rows.append(fields)
    return rows


def test_check_shipped_algebra():
    code, text = run("check", "I(1,1)", "--format", "records")
    assert code == 0
    rows = records(text)
    assert {r["check"] for r in rows} == {"structure", "super_jacobi"}
    assert all(r["status"] == "pass" for r in rows)
    assert all(r["residual_nonzero_count"] == "0" for r in rows)


def test_check_symbolic_parameter_stays_symbolic():
    code, text = run("check", "C1_p", "--format", "records")
    assert code == 0
    code, text = run("check", "C1_p", "--set", "p=2", "--format", "records")
    assert code == 0


def test_check_as_dual():
    code, text = run("check", "A11_A", "--as-dual", "--format", "records")
    assert code == 0
    assert {r["check"] for r in records(text)} == {
        "dual_structure", "dual_super_jacobi"}


def test_check_file_with_pairs(tmp_path):
    src = tmp_path / "local.sbg"
    src.write_text(
        "algebra L {\n"
        "  bosons: X1;\n"
        "  fermions: X2;\n"
        "  [X1, X2] = X2;\n"
        "}\n"
        'pair "local-1" {\n'
        "  table: 4;\n"
        "  primal: L;\n"
        "  dual: {\n"
        "    {Xt2, Xt2} = i*Xt1;\n"
        "  };\n"
        "}\n"
    )
    code, text = run("check", str(src), "--format", "records")
    assert code == 0
    rows = records(text)
    assert any(r["entry"] == "local-1" for r in rows)


def test_check_reports_broken_bracket_closure(tmp_path):
    src = tmp_path / "broken.sbg"
    src.write_text(
        "algebra L {\n"
        "  bosons: X1;\n"
        "  fermions: X2;\n"
        "  [X1, X2] = X2;\n"
        "  {X2, X2} = i*X1;\n"
        "}\n"
    )
    code, text = run("check", str(src), "--format", "records")
    assert code == 1
    rows = records(text)
    assert any(r["check"] == "super_jacobi" and r["status"] == "fail"
               for r in rows)


def test_duals_prints_the_family():
    code, text = run("duals", "C4")
    assert code == 0
    assert "dim=3" in text and "family 1:" in text


def test_pair_with_inline_dual():
    code, text = run("pair", "B", "--dual", "{X2, X2} = i*X1",
                     "--format", "records")
    assert code == 0
    rows = records(text)
    assert len(rows) == 9 and all(r["status"] == "pass" for r in rows)


def test_pair_rejects_wrong_dual():
    code, text = run("pair", "B", "--dual", "[X1, X2] = X2",
                     "--format", "records")
    assert code == 1
    failed = {r["check"] for r in records(text) if r["status"] == "fail"}
    assert "mixed_super_jacobi" in failed


def test_double_emits_reparseable_block():
    code, text = run("double", "B", "--dual", "{X2, X2} = i*X1", "--emit")
    assert code == 0
    block = text[text.index("algebra "):]
    parsed = parse_text(block)
    (name,) = parsed.algebras
    g = parsed.algebras[name].build()
    assert g.dims.total == 4
    assert not g.super_jacobi_residual()


def test_aut_family_verify():
    code, text = run("aut", "B", "--family-verify", "--count", "3",
                     "--format", "records")
    assert code == 0
    rows = records(text)
    assert {r["check"] for r in rows} == {
        "aut_family_symbolic", "aut_family_members", "aut_family_closure"}


def test_aut_single_matrix():
    code, _ = run("aut", "B", "--matrix", "[1,0; 0,2]")
    assert code == 0
    code, _ = run("aut", "B", "--matrix", "[0,0; 0,2]")
    assert code == 1


def test_iso_between_shipped_algebras():
    code, _ = run("iso", "B", "B", "--matrix", "[1,0; 0,3]")
    assert code == 0


def test_equiv_split_pair_and_trivial_pair():
    dual = "{X2, X2} = i*X1; {X3, X3} = i*X1"
    code, text = run(
        "equiv", "A11_2A_1",
        "--d1", dual, "--d2", dual,
        "--b1", "[1,0,0; 0,1,0; 0,0,1]", "--b2", "[1,0,0; 0,1,0; 0,0,1]",
        "--format", "records",
    )
    assert code == 0
    assert "connector_in_family=true" in text


def test_sdet_command():
    code, text = run("sdet", "[2,0; 0,3]", "--dims", "1,1")
    assert code == 0
    assert "2/3" in text
    code, _ = run("sdet", "[1,0; 0,0]", "--dims", "1,1")
    assert code != 0


def test_catalog_verify_table_and_entry(tmp_path):
    code, text = run("catalog", "verify", "--table", "4")
    assert code == 0
    assert "4/4 pass" in text

    samples = tmp_path / "samples.txt"
    samples.write_text("t6-24: k = 3\n")
    code, text = run("catalog", "verify", "--entry", "t6-24",
                     "--samples", str(samples), "--format", "records")
    assert code == 0
    rows = records(text)
    assert len(rows) == 9
    assert all(r["entry"] == "t6-24" and r["status"] == "pass" for r in rows)


def test_catalog_records_are_byte_deterministic():
    first = run("catalog", "verify", "--table", "5", "--format", "records")
    second = run("catalog", "verify", "--table", "5", "--format", "records")
    assert first == second


def test_catalog_figures(tmp_path):
    figdir = tmp_path / "figs"
    code, text = run("catalog", "verify", "--table", "4",
                     "--figures", str(figdir))
    assert code == 0
    made = sorted(p.name for p in figdir.glob("*.png"))
    assert made == ["catalog_summary.png", "catalog_table4.png"]


def test_unknown_id_exits_two(capsys):
    code, _ = run("check", "definitely-not-real")
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_bad_matrix_literal_exits_two(capsys):
    code, _ = run("sdet", "[1,2; 3", "--dims", "1,1")
    assert code == 2
    assert "error:" in capsys.readouterr().err
