"""Tests for goal generation."""
import pytest

from lf_refine.codegen import goal_of_term, goal_of_type
from lf_refine.errors import UnboundIndex, UndeclaredConstant
from lf_refine.frontend.emit import emit_goal
from lf_refine.hornlog import EqKind, EqType, ShiftEq, SubstEq, TermOf, Top, TypeOf
from lf_refine.kernel.syntax import Signature, TermDecl, TyConst, TypeDecl, TYPE
from lf_refine.metasyntax import (
    FreshSupply, MApp, MConst, MPiT, MTYPE, MTyConst, NIL, Cons, Sort,
    embed_context, metas, var,
)


def _supply_for(problem):
    supply = FreshSupply()
    supply.reserve(metas(problem))
    return supply


def test_fromjust_goal_shape(fromjust_sig, fromjust_ctx, fromjust_problem):
    problem, hole_a, hole_b = fromjust_problem
    gen = goal_of_term(fromjust_sig, embed_context(fromjust_ctx), problem, _supply_for(problem))
    kinds = [type(atom) for atom in gen.goal.atoms]
    assert len(gen.goal) == 12
    assert kinds == [
        Top, Top, EqType, SubstEq, ShiftEq, EqType, SubstEq,
        TypeOf, TermOf, EqKind, EqType, SubstEq,
    ]
    labels = [label.name for label in gen.goal.labels]
    assert labels == ["g1", "g2", "g3", "g4", "g5", "g6", "g7", "?A", "?b", "g8", "g9", "g10"]
    assert gen.goal.label("?A").meta == hole_a
    assert gen.goal.label("?b").meta == hole_b
    assert gen.holes[hole_b] == gen.goal.label("?b").subject


def test_hole_subject_replaces_hole_in_copies(fromjust_sig, fromjust_ctx, fromjust_problem):
    problem, _, hole_b = fromjust_problem
    gen = goal_of_term(fromjust_sig, embed_context(fromjust_ctx), problem, _supply_for(problem))
    assert all(hole_b not in metas(atom) for atom in gen.goal.atoms)


def test_constant_contributes_top():
    sig = Signature((("o", TypeDecl(TYPE)), ("c", TermDecl(TyConst("o")))))
    gen = goal_of_term(sig, NIL, MConst("c"), FreshSupply())
    assert gen.goal.atoms == (Top(),)
    assert gen.synthesized == MTyConst("o")


def test_variable_shifts_once_per_binder(toy_sig):
    ctx = Cons(MTyConst("o"), Cons(MTyConst("o"), NIL))
    gen = goal_of_term(toy_sig, ctx, var(1), FreshSupply())
    assert [type(atom) for atom in gen.goal.atoms] == [ShiftEq, ShiftEq]
    assert gen.goal.atoms[0].subject == MTyConst("o")


def test_variable_past_closed_context():
    with pytest.raises(UnboundIndex) as info:
        goal_of_term(Signature(), NIL, var(0), FreshSupply())
    assert info.value.index == 0


def test_undeclared_constant(toy_sig):
    with pytest.raises(UndeclaredConstant) as info:
        goal_of_term(toy_sig, NIL, MConst("nope"), FreshSupply())
    assert info.value.name == "nope"


def test_type_goal_for_arrow(toy_sig):
    supply = FreshSupply()
    hole = supply.meta(Sort.TYPE, "T")
    gen = goal_of_type(toy_sig, NIL, MPiT(MTyConst("o"), hole), supply)
    assert gen.synthesized == MTYPE
    assert [label.name for label in gen.goal.labels] == ["g1", "?T", "g2", "g3"]


def test_repeated_hole_labels(arith_sig):
    supply = FreshSupply()
    hole = supply.meta(Sort.TERM, "x")
    problem = MApp(MApp(MConst("plus"), hole), hole)
    gen = goal_of_term(arith_sig, NIL, problem, supply)
    names = [label.name for label in gen.goal.labels if label.meta is not None]
    assert names == ["?x", "?x#1"]
    subjects = {label.subject for label in gen.goal.labels if label.meta is not None}
    assert len(subjects) == 1


def test_goal_text_numbers_variables_across_goal(fromjust_sig, fromjust_ctx, fromjust_problem):
    problem, _, _ = fromjust_problem
    gen = goal_of_term(fromjust_sig, embed_context(fromjust_ctx), problem, _supply_for(problem))
    lines = emit_goal(gen.goal).splitlines()
    assert len(lines) == 12
    assert lines[0] == "goal(g1, top)."
    assert lines[7].startswith("goal('?A', type(A")
