"""Tests for direct evaluation of shift, subst and whr atoms."""
import pytest

from lf_refine.compute import Stuck, blocking_input, evaluate, output_of
from lf_refine.hornlog import EMPTY, ShiftEq, Subst, SubstEq, Whr
from lf_refine.metasyntax import (
    FreshSupply, MApp, MConst, MLam, MPiT, MTyConst, Sort, Succ, ZERO, var,
)

SUPPLY = FreshSupply()
X = SUPPLY.meta(Sort.TERM, "x")
OUT = SUPPLY.meta(Sort.TERM, "out")
TY_OUT = SUPPLY.meta(Sort.TYPE, "out")
O = MTyConst("o")
F, C = MConst("f"), MConst("c")


def test_shift_variable_at_cutoff_zero():
    computed = evaluate(ShiftEq(var(0), ZERO, OUT), EMPTY)
    assert computed.value == var(1)
    assert computed.proof.head == "shifttgt"
    assert computed.proof.computed


def test_shift_below_cutoff():
    computed = evaluate(ShiftEq(var(0), Succ(ZERO), OUT), EMPTY)
    assert computed.value == var(0)
    assert computed.proof.head == "shifttpred"


def test_shift_constant_names_its_clause():
    assert evaluate(ShiftEq(C, ZERO, OUT), EMPTY).proof.head == "shift_c"


def test_shift_pi_type():
    computed = evaluate(ShiftEq(MPiT(O, O), ZERO, TY_OUT), EMPTY)
    assert computed.value == MPiT(O, O)
    assert computed.proof.head == "shiftTtintro"


def test_subst_application():
    computed = evaluate(SubstEq(MApp(var(0), var(1)), C, ZERO, OUT), EMPTY)
    assert computed.value == MApp(C, var(0))
    assert computed.proof.head == "substtelim"


def test_subst_verbatim_mode():
    computed = evaluate(SubstEq(var(1), C, ZERO, OUT), EMPTY, "verbatim")
    assert computed.value == var(1)
    assert computed.proof.head == "substgt"


def test_whr_beta_and_rigid_head():
    computed = evaluate(Whr(MApp(MLam(O, var(0)), C), OUT), EMPTY)
    assert computed.value == C
    assert computed.proof.head == "whrs"
    assert evaluate(Whr(MApp(F, C), OUT), EMPTY) is None


def test_whr_under_head():
    redex = MApp(MApp(MLam(O, var(0)), F), C)
    computed = evaluate(Whr(redex, OUT), EMPTY)
    assert computed.value == MApp(F, C)
    assert computed.proof.head == "whrh"


def test_evaluation_is_stuck_on_unbound_meta():
    with pytest.raises(Stuck) as info:
        evaluate(ShiftEq(MApp(F, X), ZERO, OUT), EMPTY)
    assert info.value.meta_id == X.id


def test_evaluation_walks_bindings():
    theta = Subst({X.id: C})
    assert evaluate(ShiftEq(MApp(F, X), ZERO, OUT), theta).value == MApp(F, C)


def test_open_terms_are_evaluated_around_index_metas():
    supply = FreshSupply()
    index = supply.meta(Sort.INDEX)
    theta = Subst({index.id: Succ(ZERO)})
    computed = evaluate(ShiftEq(MApp(F, var(0)), index, OUT), theta)
    assert computed.value == MApp(F, var(0))


def test_blocking_input_and_output():
    assert blocking_input(ShiftEq(X, ZERO, OUT), EMPTY) == X.id
    assert blocking_input(ShiftEq(X, ZERO, OUT), Subst({X.id: C})) is None
    assert blocking_input(Whr(X, OUT), EMPTY) == X.id
    assert output_of(Whr(X, OUT)) == OUT
    assert output_of(SubstEq(X, C, ZERO, OUT)) == OUT
