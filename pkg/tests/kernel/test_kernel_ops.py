"""Tests for shifting, substitution, erasure and weak head reduction."""
import pytest

from lf_refine.errors import FuelExhausted
from lf_refine.kernel.ops import SubstMode, erase, shift, subst, whnf, whr_step
from lf_refine.kernel.syntax import (
    App, Arrow, Base, Const, Lam, PiK, PiT, SIMPLE_TYPE, TyApp, TyConst, TYPE, Var,
)

ALPHA = TyConst("alpha")
BOOL = TyConst("bool")
C, D = Const("c"), Const("d")


def test_shift_free_variable():
    assert shift(Var(0), 0) == Var(1)


def test_shift_leaves_constants():
    assert shift(C, 0) == C


def test_shift_leaves_bound_variable():
    assert shift(Lam(ALPHA, Var(0)), 0) == Lam(ALPHA, Var(0))


def test_shift_below_cutoff_is_identity():
    assert shift(App(Var(0), Var(2)), 1) == App(Var(0), Var(3))


def test_subst_hit():
    assert subst(Var(0), C, 0) == C


def test_subst_constant():
    assert subst(C, D, 3) == C


def test_subst_standard_decrements_free_indices():
    assert subst(App(Var(0), Var(1)), C, 0) == App(C, Var(0))


def test_subst_verbatim_keeps_indices_above_target():
    assert subst(App(Var(0), Var(1)), C, 0, SubstMode.VERBATIM) == App(C, Var(1))


def test_subst_under_binder_shifts_replacement():
    # (\ y . x) with x := Var 0 of the outer scope
    body = Lam(ALPHA, Var(1))
    assert subst(body, Var(0), 0) == Lam(ALPHA, Var(1))


def test_subst_accepts_mode_string():
    assert subst(Var(0), C, 0, "verbatim") == C


def test_erase_constant_and_application():
    assert erase(ALPHA) == Base("alpha")
    assert erase(TyApp(TyConst("maybe_A"), Const("tt"))) == Base("maybe_A")


def test_erase_family_kind():
    kind = PiK(BOOL, PiK(BOOL, TYPE))
    assert erase(kind) == Arrow(Base("bool"), Arrow(Base("bool"), SIMPLE_TYPE))


def test_erase_pi_type():
    assert erase(PiT(BOOL, ALPHA)) == Arrow(Base("bool"), Base("alpha"))


def test_whr_step_beta():
    m = App(Var(0), Var(1))
    assert whr_step(App(Lam(ALPHA, m), C)) == subst(m, C, 0)


def test_whr_step_no_redex():
    assert whr_step(C) is None
    assert whr_step(App(C, D)) is None


def test_whr_step_head_congruence():
    assert whr_step(App(App(Lam(ALPHA, Var(0)), C), D)) == App(C, D)


def test_whnf():
    assert whnf(C, 10) == C
    assert whnf(App(Lam(ALPHA, Var(0)), C), 10) == C


def test_whnf_runs_out_of_fuel():
    omega = Lam(ALPHA, App(Var(0), Var(0)))
    with pytest.raises(FuelExhausted):
        whnf(App(omega, omega), 5)


def test_var_rejects_negative_index():
    with pytest.raises(ValueError):
        Var(-1)
