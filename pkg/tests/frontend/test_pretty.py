"""Tests for printing nameless values as surface text."""
from lf_refine.frontend import elaborate_source, pretty, pretty_context, pretty_signature
from lf_refine.kernel.syntax import App, Const, Lam, PiT, TyApp, TyConst, Var
from lf_refine.metasyntax import FreshSupply, MApp, MConst, Sort, var

EQ_TT_FF = TyApp(TyApp(TyConst("=="), Const("tt")), Const("ff"))


def test_lambda_with_equality_annotation():
    term = Lam(EQ_TT_FF, App(Const("elim_=="), Var(0)))
    assert pretty(term) == "\\ (x0 : tt == ff) . elim_== x0"


def test_context_names_for_free_variables(fromjust_expected):
    term, ty = fromjust_expected
    assert pretty(term, ["m"]) == "elim_maybe_A tt m (\\ (x0 : tt == ff) . elim_== x0)"
    assert pretty(ty) == "(tt == tt -> A -> A) -> A"


def test_unnamed_free_variable():
    assert pretty(Var(0)) == "#0"
    assert pretty(MApp(MConst("elim_=="), var(0))) == "elim_== #0"


def test_binder_names_avoid_visible_names():
    term = Lam(TyConst("o"), Var(0))
    assert pretty(term, avoid=["x0"]) == "\\ (x1 : o) . x1"
    assert pretty(Lam(TyConst("o"), Lam(TyConst("o"), Var(1)))) == "\\ (x0 : o) . \\ (x1 : o) . x0"


def test_dependent_pi_keeps_binder():
    ty = PiT(TyConst("bool"), TyApp(TyConst("p"), Var(0)))
    assert pretty(ty) == "Pi (x0 : bool) . p x0"


def test_arrow_domain_is_parenthesized():
    ty = PiT(PiT(TyConst("o"), TyConst("o")), TyConst("o"))
    assert pretty(ty) == "(o -> o) -> o"


def test_application_argument_is_parenthesized():
    assert pretty(App(Const("f"), App(Const("f"), Const("a")))) == "f (f a)"


def test_holes_print_with_their_names():
    supply = FreshSupply()
    hole = supply.meta(Sort.TERM, "b")
    assert pretty(MApp(MConst("f"), hole)) == "f ?b"


def test_signature_round_trip(fromjust_sig):
    text = pretty_signature(fromjust_sig)
    assert elaborate_source(text).signature == fromjust_sig
    assert text.splitlines()[4] == "== : bool -> bool -> type ."


def test_context_round_trip(fromjust_sig, fromjust_ctx):
    text = pretty_signature(fromjust_sig) + pretty_context(fromjust_ctx, ["m"])
    assert text.endswith("ctx m : maybe_A tt .\n")
    assert elaborate_source(text).context == fromjust_ctx


def test_fixture_round_trip(fixtures_dir):
    source = (fixtures_dir / "fromjust.slf").read_text(encoding="utf-8")
    elaborated = elaborate_source(source)
    constants = [name for name, _ in elaborated.signature]
    text = (
        pretty_signature(elaborated.signature)
        + pretty_context(elaborated.context, elaborated.context_names, constants)
        + f"refine {pretty(elaborated.problem, elaborated.context_names, constants)} .\n"
    )
    again = elaborate_source(text)
    assert again.signature == elaborated.signature
    assert again.context == elaborated.context
    assert again.problem == elaborated.problem
