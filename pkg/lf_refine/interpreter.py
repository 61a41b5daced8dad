"""From proofs back to LF: interpretation, extraction and the refine pipeline.

A proof of a ``term``/``type``/``proj`` atom is read back as the term or
type it constructs; the subproofs of side conditions (equality, shift and
subst premises) are skipped positionally. The pipeline then hands the
refined problem to the kernel, which must accept it at the synthesized
type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from utils.logger import get_logger

from .codegen.goals import GenResult, goal_of_term, goal_of_type
from .codegen.program import TERM_CLAUSE_PREFIX, TYPE_CLAUSE_PREFIX, program_of_signature
from .errors import (
    ExtractionMismatch, NotGround, NotWellFormed, RecheckFailed, ResidualMetas,
    UninterpretableHead,
)
from .hornlog.atoms import Goal, ProofTerm
from .hornlog.unify import apply_subst
from .kernel.checking import infer_kind, infer_type, same_kind, same_type
from .kernel.syntax import Context, Kind, Signature, Term, Ty
from .metasyntax import (
    FreshSupply, Meta, MApp, MConst, MLam, MPiT, MTerm, MTy, MTyApp, MTyConst,
    MVar, Refinement, Sort, Succ, ZERO, apply_refinement, embed_context, metas,
    to_kernel,
)
from .resolver import Solution, SolveConfig, solve_goal

log = get_logger(__name__)


def interpret_proof(delta: ProofTerm):
    """The term or type a subject-family proof constructs.

    Raises
    ------
    UninterpretableHead
        For proofs of equality, shift or subst atoms.
    """
    head, args = delta.head, delta.args
    match head:
        case "zero":
            return MVar(ZERO)
        case "succ":
            inner = interpret_proof(args[0])
            return MVar(Succ(inner.index))
        case "proj":
            return interpret_proof(args[0])
        case "t-elim":
            return MApp(interpret_proof(args[0]), interpret_proof(args[1]))
        case "t-intro":
            return MLam(interpret_proof(args[0]), interpret_proof(args[1]))
        case "T-elim":
            return MTyApp(interpret_proof(args[0]), interpret_proof(args[1]))
        case "T-intro":
            return MPiT(interpret_proof(args[0]), interpret_proof(args[1]))
    if not delta.computed and not args:
        if head.startswith(TERM_CLAUSE_PREFIX):
            return MConst(head[len(TERM_CLAUSE_PREFIX):])
        if head.startswith(TYPE_CLAUSE_PREFIX):
            return MTyConst(head[len(TYPE_CLAUSE_PREFIX):])
    raise UninterpretableHead(head)


def extract_refinement(goal: Goal, solution: Solution) -> Refinement:
    """Assignment of the problem's holes read off a solution.

    Term holes take the interpretation of their conjunct's proof, which
    must coincide with what the answer substitution gives the conjunct's
    subject variable. Type holes take their binding in the answer
    substitution, checked against the proof the same way.

    Raises
    ------
    ResidualMetas
        When a hole is left with metavariables in it.
    ExtractionMismatch
        When the two readings of a hole disagree.
    """
    rho: dict = {}
    big_r: dict = {}
    residual: set = set()
    for label in goal.labels:
        if label.meta is None:
            continue
        from_proof = interpret_proof(solution.proofs[label])
        if label.meta.sort is Sort.TERM:
            from_subst = apply_subst(solution.theta, Meta(label.subject))
            target = rho
        else:
            from_subst = apply_subst(solution.theta, Meta(label.meta))
            target = big_r
        if from_subst != from_proof:
            raise ExtractionMismatch(label.name, from_proof, from_subst)
        residual |= metas(from_subst)
        target.setdefault(label.meta, from_subst)
    if residual:
        raise ResidualMetas(residual)
    return Refinement(rho, big_r)


@dataclass(frozen=True)
class RefineOutcome:
    refined_term: Term
    inferred_type: Ty
    refinement: Refinement
    rechecked: bool
    solution: Solution


@dataclass(frozen=True)
class TypeRefineOutcome:
    refined_type: Ty
    inferred_kind: Kind
    refinement: Refinement
    rechecked: bool
    solution: Solution


def _ground(value):
    try:
        return to_kernel(value)
    except NotGround as exc:
        raise ResidualMetas(exc.ids) from None


def _generate(sig: Signature, ctx: Context, problem, config: SolveConfig, of_type: bool):
    supply = FreshSupply()
    supply.reserve(metas(problem))
    mctx = embed_context(ctx)
    gen: GenResult = (goal_of_type if of_type else goal_of_term)(sig, mctx, problem, supply)
    program = program_of_signature(sig, config.subst_mode, config.type_constant_typing)
    log.info("Solving a goal of %d conjuncts against %d clauses", len(gen.goal), len(program))
    solutions = solve_goal(program, gen.goal, config, supply)
    return gen, solutions


def _term_outcome(sig, ctx, problem, gen: GenResult, solution: Solution, config, recheck: bool) -> RefineOutcome:
    refinement = extract_refinement(gen.goal, solution)
    term = _ground(apply_refinement(refinement, problem))
    inferred = _ground(apply_subst(solution.theta, gen.synthesized))
    if not recheck:
        return RefineOutcome(term, inferred, refinement, False, solution)
    try:
        kernel_type = infer_type(sig, ctx, term, config.subst_mode)
    except NotWellFormed as exc:
        raise RecheckFailed(exc.location, exc.reason) from exc
    if not same_type(sig, ctx, kernel_type, inferred, config.subst_mode):
        raise RecheckFailed("", "kernel type differs from the synthesized type")
    return RefineOutcome(term, inferred, refinement, True, solution)


def refine_all(
    sig: Signature, ctx: Context, problem: MTerm, config: Optional[SolveConfig] = None, recheck: bool = True
) -> list[RefineOutcome]:
    """Up to ``config.max_solutions`` kernel-checked refinements of ``problem``.

    Raises
    ------
    NoSolution, ResidualMetas, UndeclaredConstant, UnboundIndex, RecheckFailed
    """
    config = config or SolveConfig()
    gen, solutions = _generate(sig, ctx, problem, config, of_type=False)
    outcomes = [_term_outcome(sig, ctx, problem, gen, s, config, recheck) for s in solutions]
    log.info("Refined %d solution(s), rechecked: %s", len(outcomes), recheck)
    return outcomes


def refine(
    sig: Signature, ctx: Context, problem: MTerm, config: Optional[SolveConfig] = None, recheck: bool = True
) -> RefineOutcome:
    """Fill the holes of ``problem`` and re-verify the result with the kernel.

    Parameters
    ----------
    sig : Signature
        Well-formed signature.
    ctx : Context
        Well-formed context of the problem.
    problem : MTerm
        Extended term with term holes and type holes.
    config : SolveConfig, optional
        Search settings; ``max_solutions`` is ignored.
    recheck : bool, default True
        Re-verify the refined term with the kernel. When off, the outcome
        reports ``rechecked=False``.

    Returns
    -------
    RefineOutcome
        The first refinement found, with its type.
    """
    config = (config or SolveConfig()).model_copy(update={"max_solutions": 1})
    return refine_all(sig, ctx, problem, config, recheck)[0]


def refine_type(
    sig: Signature, ctx: Context, problem: MTy, config: Optional[SolveConfig] = None
) -> TypeRefineOutcome:
    """Refine a type with holes; the result is rechecked with ``infer_kind``."""
    config = (config or SolveConfig()).model_copy(update={"max_solutions": 1})
    gen, solutions = _generate(sig, ctx, problem, config, of_type=True)
    solution = solutions[0]
    refinement = extract_refinement(gen.goal, solution)
    ty = _ground(apply_refinement(refinement, problem))
    kind = _ground(apply_subst(solution.theta, gen.synthesized))
    try:
        kernel_kind = infer_kind(sig, ctx, ty, config.subst_mode)
    except NotWellFormed as exc:
        raise RecheckFailed(exc.location, exc.reason) from exc
    if not same_kind(sig, ctx, kernel_kind, kind, config.subst_mode):
        raise RecheckFailed("", "kernel kind differs from the synthesized kind")
    return TypeRefineOutcome(ty, kind, refinement, True, solution)
