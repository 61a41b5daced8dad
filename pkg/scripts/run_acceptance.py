"""
ACCEPTANCE RUN: Corpus criteria at full size

Runs the property criteria the test-suite samples at reduced size:
1. Ground oracle equivalence over the toy signature
2. Soundness fuzz over the toy, arithmetic and dependent signatures
3. Goal-generation totality and linearity
4. Kernel algebraic laws
5. Proof replay and extraction consistency

Prints a summary table and saves it as a CSV under RESULTS_DIR.
"""

import sys
import time
from pathlib import Path

# Add project to path if needed
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from lf_refine.codegen import goal_of_term, program_of_signature  # noqa: E402
from lf_refine.config import (  # noqa: E402
    FUZZ_CASES, FUZZ_MAX_HOLES, FUZZ_MAX_SIZE, FUZZ_MAX_STEPS, GOAL_SIZE_FACTOR,
    KERNEL_LAW_CASES, ORACLE_MAX_SIZE, RESULTS_DIR, TOTALITY_CASES, TOTALITY_MAX_SIZE,
)
from lf_refine.corpus import (  # noqa: E402
    ANNOTATIONS, FF, NAT, NAT_TO_NAT, TT, FuzzCase, arith_signature, candidate_terms,
    dependent_fuzz_cases, dependent_signature, equal, fuzz_cases, maybe, totality_corpus,
    toy_signature,
)
from lf_refine.errors import (  # noqa: E402
    LFRefineError, NoSolution, RecheckFailed, ResidualMetas, UndeclaredConstant,
)
from lf_refine.hornlog import apply_subst  # noqa: E402
from lf_refine.interpreter import interpret_proof, refine  # noqa: E402
from lf_refine.kernel.checking import infer_type, same_type  # noqa: E402
from lf_refine.kernel.equality import alg_eq_term, erase_context, erase_signature  # noqa: E402
from lf_refine.kernel.ops import erase, shift, subst, whr_step  # noqa: E402
from lf_refine.kernel.syntax import App, Const, Context, Lam, PiT, Var  # noqa: E402
from lf_refine.metasyntax import (  # noqa: E402
    FreshSupply, MApp, MConst, MLam, Meta, NIL, Sort, embed, embed_context, metas, node_count,
    to_kernel, var,
)
from lf_refine.resolver import SolveConfig, replay_solution  # noqa: E402
from lf_refine.utils.results import CriterionResult, display_run_summary, save_run_summary  # noqa: E402
from utils.logger import get_logger  # noqa: E402

log = get_logger(__name__)

TOY_CTX = Context((ANNOTATIONS[0],))

# Refined solutions kept for the replay criterion: (sig, ctx, problem, outcome)
_solved = []


def _kernel_type(sig, ctx, term):
    try:
        return infer_type(sig, ctx, term)
    except LFRefineError:
        return None


def ground_oracle() -> CriterionResult:
    sig = toy_signature()
    passed = failed = 0
    mismatches = []
    for term in candidate_terms(sig, TOY_CTX, ORACLE_MAX_SIZE):
        expected = _kernel_type(sig, TOY_CTX, term)
        try:
            outcome = refine(sig, TOY_CTX, embed(term))
        except NoSolution:
            ok = expected is None
        else:
            ok = (
                expected is not None
                and outcome.refinement.is_empty()
                and same_type(sig, TOY_CTX, outcome.inferred_type, expected)
            )
            _solved.append((sig, TOY_CTX, embed(term), outcome))
        if ok:
            passed += 1
        else:
            failed += 1
            mismatches.append(str(term))
    return CriterionResult("ground oracle", passed + failed, passed, failed, 0.0, "; ".join(mismatches[:3]))


def _fromjust_case() -> FuzzCase:
    """``elim_maybe_A tt m (\\ (w : ?A) . ?b)`` under ``m : maybe_A tt``."""
    supply = FreshSupply()
    head = MApp(MApp(MConst("elim_maybe_A"), MConst("tt")), var(0))
    problem = MApp(head, MLam(supply.meta(Sort.TYPE, "A"), supply.meta(Sort.TERM, "b")))
    witness = App(
        App(App(Const("elim_maybe_A"), TT), Var(0)),
        Lam(equal(TT, FF), App(Const("elim_=="), Var(0))),
    )
    return FuzzCase(Context((maybe(TT),)), problem, witness)


def soundness_fuzz() -> CriterionResult:
    config = SolveConfig(max_steps=FUZZ_MAX_STEPS)
    fromjust = _fromjust_case()
    corpora = [
        (toy_signature(), fuzz_cases(FUZZ_CASES // 2, FUZZ_MAX_SIZE, FUZZ_MAX_HOLES)),
        (arith_signature(), fuzz_cases(
            FUZZ_CASES - FUZZ_CASES // 2, FUZZ_MAX_SIZE, FUZZ_MAX_HOLES,
            sig=arith_signature(), targets=(NAT, NAT_TO_NAT),
        )),
        (dependent_signature(), [fromjust] + dependent_fuzz_cases(
            FUZZ_CASES // 2, 2 * FUZZ_MAX_SIZE, FUZZ_MAX_HOLES,
        )),
    ]
    passed = failed = unsolved = 0
    for sig, cases in corpora:
        for case in cases:
            try:
                outcome = refine(sig, case.ctx, case.problem, config)
            except (NoSolution, ResidualMetas):
                if case is fromjust:
                    log.warning("fromJust problem left unsolved")
                    failed += 1
                    continue
                unsolved += 1
                passed += 1
                continue
            except RecheckFailed as exc:
                log.warning("Recheck failed: %s", exc)
                failed += 1
                continue
            _solved.append((sig, case.ctx, case.problem, outcome))
            passed += 1
    return CriterionResult("soundness fuzz", passed + failed, passed, failed, 0.0,
                           f"{unsolved} case(s) without a solution within budget")


def goal_totality() -> CriterionResult:
    sig = toy_signature()
    passed = failed = 0
    for term in totality_corpus(TOTALITY_CASES, TOTALITY_MAX_SIZE):
        supply = FreshSupply()
        supply.reserve(metas(term))
        try:
            gen = goal_of_term(sig, NIL, term, supply)
        except UndeclaredConstant:
            passed += 1
            continue
        except Exception:  # pylint: disable=broad-except
            log.exception("Goal generation failed")
            failed += 1
            continue
        if len(gen.goal) <= GOAL_SIZE_FACTOR * node_count(term):
            passed += 1
        else:
            failed += 1
    return CriterionResult("goal totality", passed + failed, passed, failed, 0.0)


def _redex(m, arg):
    return App(Lam(ANNOTATIONS[0], shift(m, 0)), arg)


def kernel_laws() -> CriterionResult:
    sig = toy_signature()
    ssig = erase_signature(sig)
    delta = erase_context(TOY_CTX.entries)
    dependent_bodies = [ty.body for _, ty in dependent_signature().term_constants() if isinstance(ty, PiT)]
    cases = fuzz_cases(KERNEL_LAW_CASES, FUZZ_MAX_SIZE, 1, seed=11)
    passed = failed = 0
    for case, other in zip(cases, cases[1:] + cases[:1]):
        m, n = case.witness, other.witness
        ty = infer_type(sig, TOY_CTX, m)
        tau = erase(ty)
        once = _redex(m, Const("a"))
        twice = _redex(once, Const("b"))

        def convertible(left, right):
            return alg_eq_term(ssig, delta, left, right, tau)

        symmetric = infer_type(sig, TOY_CTX, n) != ty or convertible(m, n) == convertible(n, m)
        ok = (
            subst(shift(m, 0), Const("a"), 0) == m
            and whr_step(m) == whr_step(to_kernel(embed(m)))
            and whr_step(once) == m
            and erase(subst(ty, Const("a"), 0)) == erase(ty)
            and all(erase(subst(body, m, 0)) == erase(body) for body in dependent_bodies)
            and convertible(m, m)
            and convertible(m, once) and convertible(once, twice) and convertible(m, twice)
            and convertible(twice, m)
            and symmetric
        )
        passed += ok
        failed += not ok
    return CriterionResult("kernel laws", passed + failed, passed, failed, 0.0)


def replay_consistency() -> CriterionResult:
    passed = failed = 0
    for sig, ctx, problem, outcome in _solved:
        program = program_of_signature(sig)
        supply = FreshSupply()
        supply.reserve(metas(problem))
        goal = goal_of_term(sig, embed_context(ctx), problem, supply).goal
        solution = outcome.solution
        try:
            replay_solution(program, goal, solution)
            ok = all(
                apply_subst(solution.theta, Meta(label.subject)) == interpret_proof(solution.proofs[label])
                for label in goal.labels
                if label.subject is not None
            )
        except LFRefineError as exc:
            log.warning("Replay failed: %s", exc)
            ok = False
        passed += ok
        failed += not ok
    return CriterionResult("replay consistency", passed + failed, passed, failed, 0.0)


CRITERIA = [ground_oracle, soundness_fuzz, goal_totality, kernel_laws, replay_consistency]


def _timed(criterion) -> CriterionResult:
    start = time.perf_counter()
    result = criterion()
    seconds = time.perf_counter() - start
    return CriterionResult(result.criterion, result.cases, result.passed, result.failed, seconds, result.detail)


def main():
    """Main entry point of the script."""
    print("=" * 80)
    print("LF REFINE ACCEPTANCE CRITERIA")
    print("=" * 80)

    results = []
    for criterion in CRITERIA:
        log.info("Running %s", criterion.__name__)
        results.append(_timed(criterion))

    display_run_summary(results)
    path = save_run_summary(results, RESULTS_DIR)
    print(f"\nSummary saved to {path}")
    return 0 if all(result.ok for result in results) else 1


if __name__ == "__main__":
    sys.exit(main())
