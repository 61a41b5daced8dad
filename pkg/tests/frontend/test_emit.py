"""Tests for the logic-program text of programs and goals."""
from lf_refine.codegen import goal_of_term, program_of_signature
from lf_refine.frontend import emit_goal, emit_program
from lf_refine.frontend.emit import emit_clause, write_text
from lf_refine.hornlog import HornClause, TermOf
from lf_refine.metasyntax import FreshSupply, MConst, NIL, Sort, embed_context, metas


def test_fact_and_rule_layout():
    supply = FreshSupply()
    a = supply.meta(Sort.TYPE)
    fact = HornClause("c", TermOf(MConst("c"), a, NIL))
    rule = HornClause("r", TermOf(MConst("d"), a, NIL), (TermOf(MConst("c"), a, NIL),))
    assert emit_clause(fact) == "term(const(c), A0, nil)."
    assert emit_clause(rule) == "term(const(d), A0, nil) :- term(const(c), A0, nil)."


def test_program_lines(fromjust_sig):
    text = emit_program(program_of_signature(fromjust_sig))
    assert text.endswith("\n")
    assert text.count("\n") == 84
    assert text.splitlines()[0] == "top."


def test_goal_lines(fromjust_sig, fromjust_ctx, fromjust_problem):
    problem, _, _ = fromjust_problem
    supply = FreshSupply()
    supply.reserve(metas(problem))
    gen = goal_of_term(fromjust_sig, embed_context(fromjust_ctx), problem, supply)
    lines = emit_goal(gen.goal).splitlines()
    assert len(lines) == 12
    assert lines[1] == "goal(g2, top)."
    assert all(line.startswith("goal(") and line.endswith(").") for line in lines)
    assert lines[4] == "goal(g5, shift(tyapp(tyconst(maybe_A), const(tt)), z, A2))."


def test_write_text_creates_parents(tmp_path):
    path = write_text(tmp_path / "out" / "program.pl", "top.\n")
    assert path.read_text(encoding="utf-8") == "top.\n"
