"""Command line interface: outputs, exit codes, file handling."""

import subprocess
import sys

import pytest

from selfsim import cli_main

BASILICA_TEXT = """\
alphabet 2
a = (0 1)(b, id)
b = id(a, id)
id = id(id, id)
gens a b
"""


def _run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_level_one_edges(capsys):
    code, out, err = _run(capsys, "gen", "--catalog", "basilica", "--level", "1")
    assert code == 0
    assert out == "0\t1\ta\n1\t0\ta\n0\t0\tb\n1\t1\tb\n"
    assert err == ""


def test_gen_level_one_matrix(capsys):
    code, out, _ = _run(
        capsys, "gen", "--catalog", "basilica", "--level", "1", "--format", "matrix"
    )
    assert code == 0
    assert out == "b,a\na,b\n"


def test_gen_reads_automaton_file(tmp_path, capsys):
    path = tmp_path / "basilica.txt"
    path.write_text(BASILICA_TEXT)
    code, out, _ = _run(capsys, "gen", "--automaton", str(path), "--level", "1")
    assert code == 0
    assert out == "0\t1\ta\n1\t0\ta\n0\t0\tb\n1\t1\tb\n"


def test_gen_writes_output_file(tmp_path, capsys):
    target = tmp_path / "graph.tsv"
    code, out, _ = _run(
        capsys, "gen", "--catalog", "basilica", "--level", "1", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "0\t1\ta\n1\t0\ta\n0\t0\tb\n1\t1\tb\n"


def test_gen_simplicial(capsys):
    code, out, _ = _run(
        capsys, "gen", "--catalog", "basilica", "--level", "1", "--simplicial"
    )
    assert code == 0
    assert out == "0\t1\t\n"


def test_gen_symmetrize_adds_inverse_labels(capsys):
    code, out, _ = _run(
        capsys, "gen", "--catalog", "odometer", "--level", "1", "--symmetrize"
    )
    assert code == 0
    labels = {line.split("\t")[2] for line in out.strip().split("\n")}
    assert labels == {"a", "a^-1"}


def test_gen_drop_identity(tmp_path, capsys):
    path = tmp_path / "padded.txt"
    path.write_text("alphabet 2\na = (0 1)(e, e)\ne = id(e, e)\ngens a e\n")
    code, out, err = _run(capsys, "gen", "--automaton", str(path), "--level", "1", "--drop-identity")
    assert code == 0
    assert out == "0\t1\ta\n1\t0\ta\n"
    assert "dropped identity generators: e" in err


def test_gen_drop_identity_notes_when_nothing_drops(capsys):
    code, _, err = _run(
        capsys, "gen", "--catalog", "basilica", "--level", "1", "--drop-identity"
    )
    assert code == 0
    assert "found no identity generators" in err


def test_missing_source_is_usage_error(capsys):
    code, _, err = _run(capsys, "gen", "--level", "1")
    assert code == 1
    assert "usage" in err


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, _ = _run(capsys, "frobnicate")
    assert code == 1


def test_help_exits_zero(capsys):
    code, out, _ = _run(capsys, "--help")
    assert code == 0


def test_unknown_catalog_key(capsys):
    code, _, err = _run(capsys, "gen", "--catalog", "nope", "--level", "1")
    assert code == 2
    assert "error:" in err


def test_missing_automaton_file(capsys):
    code, _, err = _run(capsys, "gen", "--automaton", "/no/such/file", "--level", "1")
    assert code == 2
    assert "error:" in err


def test_parse_error_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.txt"
    path.write_text("alphabet 2\na = (0 3)(a, a)\ngens a\n")
    code, _, err = _run(capsys, "gen", "--automaton", str(path), "--level", "1")
    assert code == 2
    assert "line 2" in err


def test_vertex_cap_exit_code(capsys):
    code, _, err = _run(
        capsys, "gen", "--catalog", "basilica", "--level", "10", "--vertex-cap", "100"
    )
    assert code == 3
    assert "cap" in err


def test_nucleus_contracting_report(capsys):
    code, out, _ = _run(capsys, "nucleus", "--catalog", "basilica")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "verdict: contracting"
    assert lines[1] == "elements: 7"
    assert lines[2] == "certificate depth: 2"
    names = lines[3:]
    assert len(names) == 7
    assert {"id", "a", "b", "a^-1", "b^-1"} <= set(names)


def test_nucleus_bound_exceeded_is_data(capsys):
    code, out, _ = _run(
        capsys, "nucleus", "--catalog", "lamplighter", "--max-elements", "50"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "verdict: bound-exceeded"
    assert "reason: elements" in lines
    assert any(line.startswith("seen: ") for line in lines)


def test_check_single_entry(capsys):
    code, out, _ = _run(capsys, "check", "--catalog", "basilica")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("[basilica] ")
    assert len(lines) > 1
    for line in lines[1:]:
        assert line.startswith("  PASS ")


def test_equiv_true_with_witness(capsys):
    code, out, _ = _run(capsys, "equiv", "--catalog", "odometer", "0^w", "1^w")
    assert code == 0
    lines = out.strip().split("\n")
    assert "p: 0^w" in lines
    assert "q: 1^w" in lines
    assert "equivalent: true" in lines
    assert any(line.startswith("witness tail: ") for line in lines)
    assert any(line.startswith("witness cycle: ") for line in lines)
    assert "witness validated: true" in lines


def test_equiv_false_is_data(capsys):
    code, out, _ = _run(capsys, "equiv", "--catalog", "odometer", "0^w", "0^w 1")
    assert code == 0
    assert "equivalent: false" in out
    assert "witness" not in out


def test_equiv_needs_contraction(capsys):
    code, _, err = _run(
        capsys, "equiv", "--catalog", "lamplighter", "0^w", "1^w", "--max-elements", "50"
    )
    assert code == 2
    assert "contracting" in err


def test_equiv_bad_point_syntax(capsys):
    code, _, err = _run(capsys, "equiv", "--catalog", "odometer", "0^w", "zzz")
    assert code == 2
    assert "error:" in err


def test_ssg_export(capsys):
    code, out, _ = _run(capsys, "ssg", "--catalog", "basilica", "--depth", "2")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert ["", "0", ""] in rows  # root hangs below the level-1 vertices
    assert ["0", "00", ""] in rows


def test_spectrum_output(capsys):
    code, out, _ = _run(capsys, "spectrum", "--catalog", "basilica", "--level", "2")
    assert code == 0
    values = [float(line) for line in out.strip().split("\n")]
    assert values == pytest.approx([1.0, 0.7071067811865476, 0.0, -0.7071067811865476], abs=1e-9)
    for line in out.strip().split("\n"):
        assert len(line.split(".")[1]) == 12


def test_pointed_export_marks_root(capsys):
    code, out, _ = _run(
        capsys, "pointed", "--catalog", "basilica", "--xi", "0^w", "--level", "2"
    )
    assert code == 0
    assert out.startswith("# root\t00\n")


def test_pointed_matrix_format_rejected(capsys):
    code, _, err = _run(
        capsys,
        "pointed", "--catalog", "basilica", "--xi", "0^w", "--level", "2",
        "--format", "matrix",
    )
    assert code == 2
    assert "error:" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        ["selfsim", "gen", "--catalog", "basilica", "--level", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0\t1\ta\n1\t0\ta\n0\t0\tb\n1\t1\tb\n"
