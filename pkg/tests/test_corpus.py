"""Tests for the seeded corpus generators."""
from lf_refine.corpus import (
    ANSWER, BASE, DEPENDENT_CTX, candidate_terms, dependent_fuzz_cases, dependent_signature,
    fuzz_cases, make_rng, punch_holes, term_size, totality_corpus, well_typed_terms,
)
from lf_refine.kernel.checking import check_signature, infer_type
from lf_refine.kernel.syntax import App, Const, Context, Lam, Var
from lf_refine.metasyntax import FreshSupply, embed, metas

CTX = Context((BASE,))


def test_candidate_counts(toy_sig):
    assert len(list(candidate_terms(toy_sig, CTX, 1))) == 4
    assert len(list(candidate_terms(toy_sig, CTX, 4))) == 25


def test_candidates_smallest_first(toy_sig):
    sizes = [term_size(t) for t in candidate_terms(toy_sig, CTX, 5)]
    assert sizes == sorted(sizes)


def test_well_typed_terms(toy_sig):
    found = dict(well_typed_terms(toy_sig, CTX, 3))
    assert len(found) == 12
    assert found[App(Const("f"), Var(0))] == BASE
    assert App(Const("f"), Const("f")) not in found
    assert Lam(BASE, Var(1)) in found


def test_term_size():
    assert term_size(Lam(BASE, App(Const("f"), Var(0)))) == 5


def test_fuzz_cases_reproducible(toy_sig):
    first = fuzz_cases(5, 6, 2, seed=7)
    second = fuzz_cases(5, 6, 2, seed=7)
    assert first == second
    for case in first:
        infer_type(toy_sig, case.ctx, case.witness)
        assert 1 <= len(metas(case.problem)) <= 2


def test_punch_holes_adds_holes():
    supply = FreshSupply()
    problem = punch_holes(make_rng(1), App(Const("f"), Const("a")), 1, supply)
    assert problem != embed(App(Const("f"), Const("a")))
    assert len(metas(problem)) == 1


def test_totality_corpus_reproducible():
    assert totality_corpus(20, 10, seed=3) == totality_corpus(20, 10, seed=3)
    assert len(totality_corpus(20, 10, seed=3)) == 20


def test_dependent_signature_is_well_formed():
    assert check_signature(dependent_signature())


def test_dependent_fuzz_cases_are_well_typed():
    sig = dependent_signature()
    cases = dependent_fuzz_cases(30, 16, 2, seed=5)
    assert cases == dependent_fuzz_cases(30, 16, 2, seed=5)
    for case in cases:
        assert case.ctx == DEPENDENT_CTX
        assert infer_type(sig, case.ctx, case.witness) == ANSWER
        assert 1 <= len(metas(case.problem)) <= 2
    assert any("elim_maybe_A" in repr(case.witness) for case in cases)
