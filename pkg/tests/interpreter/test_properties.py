"""Property runs over the seeded corpora, at reduced sizes.

``scripts/run_acceptance.py`` runs the same properties at full size.
"""
import pytest

from lf_refine.codegen import goal_of_term, program_of_signature
from lf_refine.config import FUZZ_MAX_STEPS, GOAL_SIZE_FACTOR
from lf_refine.corpus import candidate_terms, fuzz_cases, totality_corpus, toy_signature
from lf_refine.errors import LFRefineError, NoSolution, ResidualMetas
from lf_refine.interpreter import interpret_proof, refine
from lf_refine.kernel.checking import infer_type, same_type
from lf_refine.kernel.syntax import Context, TyConst
from lf_refine.hornlog import apply_subst
from lf_refine.metasyntax import FreshSupply, Meta, NIL, embed, embed_context, metas, node_count
from lf_refine.resolver import SolveConfig, replay_solution

TOY_CTX = Context((TyConst("o"),))


def _kernel_type(sig, ctx, term):
    try:
        return infer_type(sig, ctx, term)
    except LFRefineError:
        return None


@pytest.mark.parametrize("term", list(candidate_terms(toy_signature(), TOY_CTX, 4)), ids=str)
def test_ground_oracle(toy_sig, term):
    expected = _kernel_type(toy_sig, TOY_CTX, term)
    if expected is None:
        with pytest.raises(NoSolution):
            refine(toy_sig, TOY_CTX, embed(term))
        return
    outcome = refine(toy_sig, TOY_CTX, embed(term))
    assert outcome.refinement.is_empty()
    assert outcome.refined_term == term
    assert same_type(toy_sig, TOY_CTX, outcome.inferred_type, expected)


def test_soundness_fuzz(toy_sig):
    config = SolveConfig(max_steps=FUZZ_MAX_STEPS)
    refined = 0
    for case in fuzz_cases(cases=15, max_size=6, max_holes=2):
        try:
            outcome = refine(toy_sig, case.ctx, case.problem, config)
        except (NoSolution, ResidualMetas):
            continue
        assert outcome.rechecked
        refined += 1
    assert refined > 0


def test_solutions_replay_and_agree_with_proofs(toy_sig):
    program = program_of_signature(toy_sig)
    config = SolveConfig(max_steps=FUZZ_MAX_STEPS)
    for case in fuzz_cases(cases=8, max_size=5, max_holes=1, seed=7):
        try:
            outcome = refine(toy_sig, case.ctx, case.problem, config)
        except (NoSolution, ResidualMetas):
            continue
        solution = outcome.solution
        supply = FreshSupply()
        supply.reserve(metas(case.problem))
        goal = goal_of_term(toy_sig, embed_context(case.ctx), case.problem, supply).goal
        replay_solution(program, goal, solution)
        for label in goal.labels:
            if label.subject is not None:
                assert apply_subst(solution.theta, Meta(label.subject)) == interpret_proof(solution.proofs[label])


def test_goal_generation_is_total_and_linear(toy_sig):
    for term in totality_corpus(cases=200, max_size=30):
        supply = FreshSupply()
        supply.reserve(metas(term))
        gen = goal_of_term(toy_sig, NIL, term, supply)
        assert len(gen.goal) <= GOAL_SIZE_FACTOR * node_count(term)
