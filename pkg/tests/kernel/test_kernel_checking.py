"""Tests for the kernel judgments on the fromJust signature."""
import pytest

from lf_refine.errors import NotWellFormed, SignatureIllFormed
from lf_refine.kernel import (
    App, Base, Const, Context, Lam, PiK, PiT, Signature, TermDecl, TyApp,
    TyConst, TYPE, Var, alg_eq_term, check_context, check_ground_problem,
    check_kind, check_signature, erase_signature, infer_kind, infer_type,
    same_kind, same_type, struct_eq_term, validate_signature, weak_alg_eq_type,
)
from lf_refine.kernel.syntax import SIMPLE_TYPE

BOOL = TyConst("bool")
TT, FF = Const("tt"), Const("ff")


def eq(left, right):
    return TyApp(TyApp(TyConst("=="), left), right)


def maybe(index):
    return TyApp(TyConst("maybe_A"), index)


@pytest.fixture(scope="module")
def ssig(fromjust_sig):
    return erase_signature(fromjust_sig)


def test_alg_eq_term_constants(ssig):
    assert alg_eq_term(ssig, [], TT, TT, Base("bool"))
    assert not alg_eq_term(ssig, [], TT, FF, Base("bool"))


def test_alg_eq_term_reduces_head(ssig):
    assert alg_eq_term(ssig, [], App(Lam(BOOL, Var(0)), TT), TT, Base("bool"))


def test_alg_eq_term_eta(ssig):
    # elim_== and \ x . elim_== x agree at the erased arrow type
    f = Const("elim_==")
    eta = Lam(eq(TT, FF), App(f, Var(0)))
    tau = ssig.terms["elim_=="]
    assert alg_eq_term(ssig, [], f, eta, tau)


def test_struct_eq_term(ssig):
    assert struct_eq_term(ssig, [Base("bool")], Var(0), Var(0)) == Base("bool")
    assert struct_eq_term(ssig, [], TT, TT) == Base("bool")
    assert struct_eq_term(ssig, [], TT, FF) is None


def test_weak_alg_eq_type(ssig):
    assert weak_alg_eq_type(ssig, [], TyConst("A"), TyConst("A"), SIMPLE_TYPE)
    assert weak_alg_eq_type(ssig, [], eq(TT, FF), eq(TT, FF), SIMPLE_TYPE)
    assert not weak_alg_eq_type(ssig, [], eq(TT, FF), eq(TT, TT), SIMPLE_TYPE)


def test_check_kind(fromjust_sig):
    assert check_kind(fromjust_sig, Context(), TYPE)
    assert check_kind(fromjust_sig, Context(), PiK(BOOL, TYPE))
    assert not check_kind(fromjust_sig, Context(), PiK(maybe(Const("nothing")), TYPE))


def test_infer_kind(fromjust_sig):
    assert infer_kind(fromjust_sig, Context(), TyConst("maybe_A")) == PiK(BOOL, TYPE)
    assert infer_kind(fromjust_sig, Context(), maybe(TT)) == TYPE


def test_infer_kind_rejects_argument_of_wrong_type(fromjust_sig):
    with pytest.raises(NotWellFormed) as info:
        infer_kind(fromjust_sig, Context(), maybe(Const("nothing")))
    assert info.value.location == "tyapp.arg"


def test_infer_type_variable_and_constant(fromjust_sig):
    assert infer_type(fromjust_sig, Context((maybe(TT),)), Var(0)) == maybe(TT)
    assert infer_type(fromjust_sig, Context(), Const("just")) == PiT(TyConst("A"), maybe(TT))


def test_infer_type_application_in_context(fromjust_sig):
    ctx = Context((maybe(TT), eq(TT, FF)))
    assert infer_type(fromjust_sig, ctx, App(Const("elim_=="), Var(0))) == TyConst("A")


def test_infer_type_unbound_index(fromjust_sig):
    with pytest.raises(NotWellFormed):
        infer_type(fromjust_sig, Context(), Var(0))


def test_refined_fromjust_term_types(fromjust_sig, fromjust_ctx, fromjust_expected):
    term, ty = fromjust_expected
    inferred = infer_type(fromjust_sig, fromjust_ctx, term)
    assert same_type(fromjust_sig, fromjust_ctx, inferred, ty)


def test_check_signature(fromjust_sig):
    assert check_signature(Signature())
    assert check_signature(fromjust_sig)
    assert not check_signature(Signature((("c", TermDecl(TyConst("undeclared"))),)))


def test_validate_signature_reports_position():
    sig = Signature((("bool", TermDecl(TyConst("bool"))),))
    with pytest.raises(SignatureIllFormed) as info:
        validate_signature(sig)
    assert info.value.position == 0
    assert info.value.name == "bool"


def test_check_context(fromjust_sig):
    assert check_context(fromjust_sig, Context((maybe(TT), eq(TT, FF))))
    assert not check_context(fromjust_sig, Context((TyConst("maybe_A"),)))


def test_same_kind(fromjust_sig):
    kind = PiK(BOOL, PiK(BOOL, TYPE))
    assert same_kind(fromjust_sig, Context(), kind, kind)
    assert not same_kind(fromjust_sig, Context(), kind, PiK(BOOL, TYPE))


def test_check_ground_problem(fromjust_sig, fromjust_ctx, fromjust_expected):
    term, _ = fromjust_expected
    assert isinstance(check_ground_problem(fromjust_sig, fromjust_ctx, term), PiT)


def test_context_lookup_shifts_entries():
    ctx = Context((BOOL, eq(Var(0), Var(0))))
    assert ctx.lookup(0) == eq(Var(1), Var(1))
    assert ctx.lookup(1) == BOOL
    assert ctx.lookup(2) is None
