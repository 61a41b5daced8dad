"""Tests for the lf-refine command line."""
import pytest

from lf_refine.errors import FuelExhausted, NoSolution, ParseError, RecheckFailed, SignatureIllFormed
from lf_refine.frontend.cli import (
    EXIT_ILL_FORMED, EXIT_INPUT_ERROR, EXIT_NO_SOLUTION, EXIT_OK, EXIT_RECHECK_FAILED,
    build_parser, exit_code_for, main,
)


def test_refine_fromjust(fixtures_dir, capsys):
    code = main(["refine", str(fixtures_dir / "fromjust.slf")])
    out = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert out == [
        "term: elim_maybe_A tt m (\\ (x0 : tt == ff) . elim_== x0)",
        "type: (tt == tt -> A -> A) -> A",
        "refinement:",
        "  ?b := elim_== w",
        "  ?A := tt == ff",
        "rechecked: true",
    ]


def test_printed_refinement_reads_back(fixtures_dir, tmp_path, capsys):
    source = (fixtures_dir / "fromjust.slf").read_text(encoding="utf-8")
    assert main(["refine", str(fixtures_dir / "fromjust.slf")]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    fills = dict(line.strip().split(" := ") for line in lines if " := " in line)
    assert set(fills) == {"?A", "?b"}
    for hole, value in fills.items():
        source = source.replace(hole, f"({value})")
    path = tmp_path / "filled.slf"
    path.write_text(source, encoding="utf-8")
    assert main(["check", str(path)]) == EXIT_OK
    assert capsys.readouterr().out == "ok: (tt == tt -> A -> A) -> A\n"


def test_refine_uninhabited_hole(fixtures_dir, capsys):
    code = main(["refine", str(fixtures_dir / "empty_hole.slf"), "--depth", "16", "--max-steps", "5000"])
    assert code == EXIT_NO_SOLUTION
    assert capsys.readouterr().err.startswith("error: no solution")


def test_refine_all_numbers_solutions(tmp_path, capsys):
    path = tmp_path / "toy.slf"
    path.write_text("o : type .\na : o .\nb : o .\nf : o -> o .\nrefine f ?x .\n", encoding="utf-8")
    assert main(["refine", str(path), "--all", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "solution 1:\nterm: f a\n" in out
    assert "solution 2:\nterm: f b\n" in out


def test_refine_trace_goes_to_stderr(tmp_path, capsys):
    path = tmp_path / "toy.slf"
    path.write_text("o : type .\na : o .\nrefine ?x .\n", encoding="utf-8")
    assert main(["refine", str(path), "--trace", "--no-recheck"]) == EXIT_OK
    captured = capsys.readouterr()
    assert "rechecked: false" in captured.out
    assert any(line.startswith("⇝_{term_a}") for line in captured.err.splitlines())


def test_refine_without_problem(tmp_path):
    path = tmp_path / "sig.slf"
    path.write_text("o : type .\n", encoding="utf-8")
    assert main(["refine", str(path)]) == EXIT_INPUT_ERROR


def test_check_ground_file(fixtures_dir, capsys):
    assert main(["check", str(fixtures_dir / "ground.slf")]) == EXIT_OK
    assert capsys.readouterr().out == "ok: o\n"


def test_check_ill_formed_signature(fixtures_dir, capsys):
    assert main(["check", str(fixtures_dir / "ill.slf")]) == EXIT_ILL_FORMED
    assert "zero" in capsys.readouterr().err


def test_check_file_with_holes(fixtures_dir):
    assert main(["check", str(fixtures_dir / "fromjust.slf")]) == EXIT_INPUT_ERROR


def test_check_ill_typed_term(tmp_path):
    path = tmp_path / "bad.slf"
    path.write_text("o : type .\na : o .\nrefine a a .\n", encoding="utf-8")
    assert main(["check", str(path)]) == EXIT_ILL_FORMED


def test_parse_error_and_missing_file(tmp_path):
    path = tmp_path / "broken.slf"
    path.write_text("o : type .\nrefine (a .\n", encoding="utf-8")
    assert main(["check", str(path)]) == EXIT_INPUT_ERROR
    assert main(["check", str(tmp_path / "missing.slf")]) == EXIT_INPUT_ERROR


def test_emit_writes_program_and_goal(fixtures_dir, tmp_path):
    program = tmp_path / "program.pl"
    goal = tmp_path / "goal.pl"
    code = main([
        "emit", str(fixtures_dir / "fromjust.slf"), "--program", str(program), "--goal", str(goal),
    ])
    assert code == EXIT_OK
    golden = (fixtures_dir / "fromjust_program.pl").read_text(encoding="utf-8")
    assert program.read_text(encoding="utf-8") == golden
    assert len(goal.read_text(encoding="utf-8").splitlines()) == 12


def test_emit_printed_shape_to_stdout(fixtures_dir, capsys):
    assert main(["emit", str(fixtures_dir / "fromjust.slf"), "--printed-shape"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 80
    assert not any(line.startswith("type(tyconst(") for line in lines)


def test_exit_code_table():
    assert exit_code_for(NoSolution("exhausted")) == EXIT_NO_SOLUTION
    assert exit_code_for(ParseError(1, 1)) == EXIT_INPUT_ERROR
    assert exit_code_for(SignatureIllFormed(0, "c", "bad")) == EXIT_ILL_FORMED
    assert exit_code_for(RecheckFailed("", "bad")) == EXIT_RECHECK_FAILED
    assert exit_code_for(FuelExhausted(10)) == EXIT_RECHECK_FAILED


def test_parser_rejects_unknown_strategy():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["refine", "x.slf", "--strategy", "breadth-first"])


def test_parser_defaults():
    args = build_parser().parse_args(["refine", "x.slf"])
    assert args.all is None
    assert args.strategy == "iterative-deepening"
    assert build_parser().parse_args(["refine", "x.slf", "--all"]).all == 10
