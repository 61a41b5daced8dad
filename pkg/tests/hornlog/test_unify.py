"""Tests for first-order unification over the extended syntax."""
from hypothesis import given, settings
from hypothesis import strategies as st

from lf_refine.hornlog import (
    EMPTY, HornClause, Subst, TermOf, apply_subst, compose, occurs, rename_clause, unify,
)
from lf_refine.metasyntax import (
    FreshSupply, MApp, MConst, Meta, MetaId, MLam, MTyConst, NIL, Sort, metas, var,
)

SUPPLY = FreshSupply()
X = SUPPLY.meta(Sort.TERM, "x")
Y = SUPPLY.meta(Sort.TERM, "y")
A = SUPPLY.meta(Sort.TYPE, "a")

F, C = MConst("f"), MConst("c")
O = MTyConst("o")


def test_unify_binds_metavariable():
    theta = unify(MApp(F, X), MApp(F, C))
    assert theta is not None
    assert apply_subst(theta, X) == C


def test_unify_identical_values_leaves_substitution():
    assert unify(MApp(F, C), MApp(F, C)) is EMPTY


def test_unify_constructor_clash():
    assert unify(MApp(F, C), MLam(O, C)) is None
    assert unify(MConst("f"), MConst("g")) is None


def test_unify_occurs_check():
    assert unify(X, MApp(F, X)) is None


def test_unify_rejects_sort_mismatch():
    assert unify(A, C) is None
    assert unify(A, O) is not None


def test_unify_follows_existing_bindings():
    theta = Subst({X.id: Y})
    result = unify(X, C, theta)
    assert apply_subst(result, Y) == C
    assert apply_subst(result, X) == C


def test_unify_chained_occurs_check():
    theta = unify(X, MApp(F, Y))
    assert unify(Y, MApp(F, X), theta) is None


def test_unify_binders_are_plain_constructors():
    theta = unify(MLam(A, var(0)), MLam(O, var(0)))
    assert apply_subst(theta, A) == O


def test_compose_applies_in_order():
    first = Subst({X.id: MApp(F, Y)})
    second = Subst({Y.id: C})
    composed = compose(first, second)
    assert apply_subst(composed, X) == apply_subst(second, apply_subst(first, X))


def test_occurs_through_bindings():
    theta = Subst({Y.id: MApp(F, X)})
    assert occurs(X.id, Y, theta)
    assert not occurs(X.id, C, theta)


def test_restrict_resolves_values():
    theta = Subst({X.id: MApp(F, Y), Y.id: C})
    assert theta.restrict([X.id]) == Subst({X.id: MApp(F, C)})


def test_rename_clause_standardizes_apart():
    supply = FreshSupply()
    supply.reserve([X.id, Y.id, A.id])
    clause = HornClause("k", TermOf(X, A, NIL), (TermOf(X, O, NIL),))
    renamed = rename_clause(clause, supply)
    assert renamed.name == "k"
    assert not metas(renamed.head) & metas(clause.head)
    assert renamed.head.m == renamed.body[0].m


values = st.recursive(
    st.sampled_from([F, C, X, Y, var(0), var(1)]),
    lambda inner: st.builds(MApp, inner, inner),
    max_leaves=8,
)


@settings(max_examples=100, deadline=None)
@given(values, values)
def test_unifier_equates_both_sides(left, right):
    theta = unify(left, right)
    if theta is not None:
        assert apply_subst(theta, left) == apply_subst(theta, right)


@settings(max_examples=100, deadline=None)
@given(values)
def test_value_unifies_with_itself(value):
    assert unify(value, value) is EMPTY


def test_meta_ids_compare_by_sort_and_serial():
    assert MetaId(Sort.TERM, 0) != MetaId(Sort.TYPE, 0)
    assert Meta(MetaId(Sort.TERM, 0)) == Meta(MetaId(Sort.TERM, 0, "hint"))
