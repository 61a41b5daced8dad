"""Proof-relevant SLD resolution.

Conjunctions are solved one selected atom at a time under a single
threaded substitution. Each clause application records a proof term
``κ δ₁ … δₙ`` whose arguments follow the clause body order, whatever order
the atoms were selected in.

Search is depth-first in clause order. A derivation is measured by its
size, the number of clause applications in it; directly evaluated
computed atoms are free. Under the iterative-deepening strategy every
selected goal conjunct is retried with size limits 1, 2, … until a limit
completes without cutting a branch, so the first answer found for a
conjunct is its smallest derivation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field

from utils.logger import get_logger

from .compute import Computed, Stuck, blocking_input, evaluate, output_of
from .config import MAX_DEPTH, MAX_SOLUTIONS, MAX_STEPS
from .errors import NoSolution, ReplayError
from .hornlog.atoms import (
    COMPUTED_ATOMS, EQUALITY_ATOMS, SUBJECT_ATOMS, Atom, Goal, GoalVar,
    Program, ProofTerm, subject_of,
)
from .hornlog.printing import format_atom
from .hornlog.unify import EMPTY, Subst, apply_subst, rename_clause, unify
from .kernel.ops import SubstMode
from .metasyntax import FreshSupply, Meta, MetaId, metas

log = get_logger(__name__)


class Strategy(str, Enum):
    DEPTH_FIRST = "depth-first"
    ITERATIVE_DEEPENING = "iterative-deepening"


class SolveConfig(BaseModel):
    """Search settings for one solve."""

    model_config = ConfigDict(frozen=True)

    max_depth: int = Field(default=MAX_DEPTH, ge=1)
    strategy: Strategy = Strategy.ITERATIVE_DEEPENING
    max_solutions: int = Field(default=MAX_SOLUTIONS, ge=1)
    trace: bool = False
    pure_clauses: bool = False
    subst_mode: SubstMode = SubstMode.STANDARD
    max_steps: int = Field(default=MAX_STEPS, ge=1)
    type_constant_typing: bool = True


@dataclass(frozen=True)
class Solution:
    """Answer substitution, one proof per goal label, optional trace."""

    theta: Subst
    proofs: Mapping[GoalVar, ProofTerm]
    trace: tuple[str, ...] = field(default=())

    def proof(self, label: str) -> ProofTerm:
        for goal_var, proof in self.proofs.items():
            if goal_var.name == label:
                return proof
        raise KeyError(label)


class _BudgetExceeded(Exception):
    pass


class _DepthCut:
    """Records whether a search below some point hit its size limit."""

    __slots__ = ("cut",)

    def __init__(self):
        self.cut = False


_NOT_EVALUATED = object()


class _Search:
    def __init__(self, program: Program, config: SolveConfig, supply: FreshSupply):
        self.program = program
        self.config = config
        self.supply = supply
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.config.max_steps:
            raise _BudgetExceeded()

    def evaluate(self, atom: Atom, theta: Subst) -> Optional[Computed]:
        self.tick()
        return evaluate(atom, theta, self.config.subst_mode)

    def select(self, atoms, theta: Subst):
        """Index of the next atom to solve and its evaluation, if one was run."""
        for k, (_, atom) in enumerate(atoms):
            if isinstance(atom, SUBJECT_ATOMS):
                if isinstance(theta.walk(subject_of(atom)), Meta):
                    continue
                return k, _NOT_EVALUATED
            if isinstance(atom, EQUALITY_ATOMS):
                left, right = (getattr(atom, f) for f in atom.__match_args__[:2])
                if isinstance(theta.walk(left), Meta) and isinstance(theta.walk(right), Meta):
                    continue
                return k, _NOT_EVALUATED
            if isinstance(atom, COMPUTED_ATOMS):
                if blocking_input(atom, theta) is not None:
                    continue
                if self.config.pure_clauses:
                    return k, _NOT_EVALUATED
                try:
                    return k, self.evaluate(atom, theta)
                except Stuck:
                    continue
            return k, _NOT_EVALUATED
        for k, (_, atom) in enumerate(atoms):
            if isinstance(atom, SUBJECT_ATOMS):
                return k, _NOT_EVALUATED
        return 0, _NOT_EVALUATED

    def solve_atom(
        self, atom: Atom, theta: Subst, budget: int, tracker: _DepthCut, evaluated=_NOT_EVALUATED
    ) -> Iterator[tuple[Subst, ProofTerm, int]]:
        """Derivations of ``atom`` using at most ``budget`` clause applications.

        Yields the substitution, the proof and the unused budget.
        """
        if isinstance(atom, COMPUTED_ATOMS):
            if blocking_input(atom, theta) is not None:
                return
            if not self.config.pure_clauses:
                try:
                    result = self.evaluate(atom, theta) if evaluated is _NOT_EVALUATED else evaluated
                except Stuck:
                    pass
                else:
                    if result is None:
                        return
                    solved = unify(output_of(atom), result.value, theta)
                    if solved is not None:
                        yield solved, result.proof, budget
                    return
        if budget <= 0:
            tracker.cut = True
            return
        outer = metas(apply_subst(theta, atom))
        subject = theta.walk(subject_of(atom))
        for clause in self.program.candidates(atom, subject):
            self.tick()
            renamed = rename_clause(clause, self.supply)
            unified = unify(renamed.head, atom, theta)
            if unified is None:
                continue
            body = tuple(enumerate(renamed.body))
            for solved, proofs, left in self.body(body, unified, budget - 1, outer, tracker):
                yield solved, ProofTerm(clause.name, tuple(proofs[i] for i in range(len(body)))), left

    def body(
        self, atoms, theta: Subst, budget: int, outer: frozenset, tracker: _DepthCut
    ) -> Iterator[tuple[Subst, dict[int, ProofTerm], int]]:
        """Clause body atoms sharing one budget, threaded left to right."""
        if not atoms:
            yield theta, {}, budget
            return
        k, evaluated = self.select(atoms, theta)
        position, atom = atoms[k]
        rest = atoms[:k] + atoms[k + 1:]
        visible = sorted(outer | metas(tuple(a for _, a in rest)), key=MetaId.sort_key)
        # answer key -> most budget left over by a derivation of it
        best: dict[tuple, int] = {}
        for solved, proof, left in self.solve_atom(atom, theta, budget, tracker, evaluated):
            key = tuple(apply_subst(solved, Meta(m)) for m in visible)
            if best.get(key, -1) >= left:
                continue
            best[key] = left
            for final, proofs, remaining in self.body(rest, solved, left, outer, tracker):
                proofs = dict(proofs)
                proofs[position] = proof
                yield final, proofs, remaining

    def attempts(self, atom, theta, limit, tracker, evaluated=_NOT_EVALUATED) -> Iterator[tuple[Subst, ProofTerm]]:
        """Solutions of one goal conjunct, smallest derivations first."""
        if self.config.strategy is Strategy.DEPTH_FIRST:
            for solved, proof, _ in self.solve_atom(atom, theta, limit, tracker, evaluated):
                yield solved, proof
            return
        for bound in range(min(1, limit), limit + 1):
            local = _DepthCut()
            for solved, proof, _ in self.solve_atom(atom, theta, bound, local, evaluated):
                yield solved, proof
            if not local.cut:
                return
            log.debug("deepening past size %d after %d steps", bound, self.steps)
        tracker.cut = True

    def conjunction(
        self, atoms, theta: Subst, limit: int, outer: frozenset, tracker: _DepthCut
    ) -> Iterator[tuple[Subst, dict[int, ProofTerm]]]:
        """Goal conjuncts, each with its own size limit."""
        if not atoms:
            yield theta, {}
            return
        k, evaluated = self.select(atoms, theta)
        position, atom = atoms[k]
        rest = atoms[:k] + atoms[k + 1:]
        visible = sorted(outer | metas(tuple(a for _, a in rest)), key=MetaId.sort_key)
        seen = set()
        for solved, proof in self.attempts(atom, theta, limit, tracker, evaluated):
            key = tuple(apply_subst(solved, Meta(m)) for m in visible)
            if key in seen:
                continue
            seen.add(key)
            for final, proofs in self.conjunction(rest, solved, limit, outer, tracker):
                proofs = dict(proofs)
                proofs[position] = proof
                yield final, proofs


def _supply_for(subject, theta: Subst = EMPTY) -> FreshSupply:
    supply = FreshSupply()
    supply.reserve(metas(subject))
    supply.reserve(theta)
    for _, value in theta.items():
        supply.reserve(metas(value))
    return supply


def solve_atom(
    program: Program,
    atom: Atom,
    theta_in: Subst = EMPTY,
    depth: int = MAX_DEPTH,
    supply: Optional[FreshSupply] = None,
    config: Optional[SolveConfig] = None,
) -> Iterator[tuple[Subst, ProofTerm]]:
    """Lazily enumerate ``(θ, δ)`` for one atom.

    Derivations of more than ``depth`` clause applications are pruned
    silently. Under iterative deepening the smallest derivations come
    first and each instantiation of the atom is produced once; the stream
    also ends quietly when ``config.max_steps`` runs out.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    config = config or SolveConfig()
    supply = supply or _supply_for(atom, theta_in)
    search = _Search(program, config, supply)
    visible = sorted(metas(apply_subst(theta_in, atom)), key=MetaId.sort_key)
    seen = set()
    try:
        for solved, proof in search.attempts(atom, theta_in, depth, _DepthCut()):
            key = tuple(apply_subst(solved, Meta(m)) for m in visible)
            if key in seen:
                continue
            seen.add(key)
            yield solved, proof
    except _BudgetExceeded:
        log.warning("search budget of %d steps exhausted", config.max_steps)


def solve_goal(
    program: Program,
    goal: Goal,
    config: Optional[SolveConfig] = None,
    supply: Optional[FreshSupply] = None,
) -> list[Solution]:
    """Solve every conjunct of ``goal`` and bind each label to its proof.

    Parameters
    ----------
    program : Program
        Clauses to resolve against.
    goal : Goal
        Labelled conjunction.
    config : SolveConfig, optional
        Defaults to ``SolveConfig()``.
    supply : FreshSupply, optional
        Fresh names for renamed clauses; built from the goal when omitted.

    Returns
    -------
    list of Solution
        At most ``config.max_solutions`` solutions with pairwise distinct
        bindings of the goal's metavariables.

    Raises
    ------
    NoSolution
        ``"exhausted"`` when the search space was finite, ``"depth-limited"``
        when some branch was cut at ``max_depth``, ``"budget"`` when
        ``max_steps`` ran out before any solution.
    """
    config = config or SolveConfig()
    supply = supply or _supply_for(goal.atoms)
    search = _Search(program, config, supply)
    tracker = _DepthCut()
    atoms = tuple(enumerate(goal.atoms))
    labels = goal.labels
    solutions: list[Solution] = []
    try:
        for theta, proofs in search.conjunction(
            atoms, EMPTY, config.max_depth, metas(goal.atoms), tracker
        ):
            mapped = {labels[i]: proofs[i] for i in range(len(labels))}
            solution = Solution(theta, mapped)
            if config.trace:
                solution = Solution(theta, mapped, trace_lines(program, goal, solution, config.subst_mode))
            solutions.append(solution)
            if len(solutions) >= config.max_solutions:
                break
    except _BudgetExceeded:
        log.warning("search budget of %d steps exhausted", config.max_steps)
        if not solutions:
            raise NoSolution("budget", f"{config.max_steps} steps") from None
    log.debug("solve finished after %d steps with %d solution(s)", search.steps, len(solutions))
    if not solutions:
        raise NoSolution("depth-limited" if tracker.cut else "exhausted")
    return solutions


# ──────────────────────────────────────────────────────────────────────────────
# Replay
# ──────────────────────────────────────────────────────────────────────────────

def _replay_order(pairs, theta: Subst, mode: SubstMode) -> list[int]:
    """Body positions in an order where computed leaves have their inputs."""
    pending = list(range(len(pairs)))
    order = []
    current = theta
    while pending:
        chosen = pending[0]
        for k in pending:
            atom, proof = pairs[k]
            if not proof.computed:
                chosen = k
                break
            try:
                evaluate(atom, current, mode)
            except Stuck:
                continue
            chosen = k
            break
        pending.remove(chosen)
        order.append(chosen)
    return order


class _Replayer:
    def __init__(self, program: Program, supply: FreshSupply, mode: SubstMode, lines: Optional[list]):
        self.program = program
        self.supply = supply
        self.mode = mode
        self.lines = lines

    def note(self, head: str, atom: Atom, theta: Subst):
        if self.lines is not None:
            self.lines.append(f"⇝_{{{head}}} {format_atom(apply_subst(theta, atom))}")

    def replay(self, atom: Atom, proof: ProofTerm, theta: Subst) -> Subst:
        if proof.computed:
            try:
                result = evaluate(atom, theta, self.mode)
            except Stuck as exc:
                raise ReplayError(proof.head, str(exc)) from None
            if result is None or result.proof.head != proof.head:
                raise ReplayError(proof.head, "evaluation disagrees with the recorded step")
            solved = unify(output_of(atom), result.value, theta)
            if solved is None:
                raise ReplayError(proof.head, "computed output does not unify")
            self.note(proof.head, atom, solved)
            return solved
        if proof.head not in self.program:
            raise ReplayError(proof.head, "no such clause")
        clause = rename_clause(self.program.clause(proof.head), self.supply)
        if len(clause.body) != len(proof.args):
            raise ReplayError(proof.head, f"expects {len(clause.body)} subproofs, got {len(proof.args)}")
        solved = unify(clause.head, atom, theta)
        if solved is None:
            raise ReplayError(proof.head, "clause head does not unify")
        self.note(proof.head, atom, solved)
        pairs = list(zip(clause.body, proof.args))
        for k in _replay_order(pairs, solved, self.mode):
            solved = self.replay(pairs[k][0], pairs[k][1], solved)
        return solved


def replay_proof(
    program: Program,
    atom: Atom,
    proof: ProofTerm,
    theta: Subst = EMPTY,
    subst_mode: SubstMode | str = SubstMode.STANDARD,
    lines: Optional[list] = None,
) -> Subst:
    """Re-derive ``atom`` from ``proof`` top-down.

    Every step unifies the named clause's head with the instantiated atom
    and recurses on the body; computed leaves are re-evaluated.

    Raises
    ------
    ReplayError
        On the first step that does not go through.
    """
    supply = _supply_for(atom, theta)
    return _Replayer(program, supply, SubstMode(subst_mode), lines).replay(atom, proof, theta)


def replay_solution(
    program: Program, goal: Goal, solution: Solution, subst_mode: SubstMode | str = SubstMode.STANDARD
) -> Subst:
    """Replay every conjunct's proof from the solution's answer substitution."""
    theta = solution.theta
    for label, atom in goal:
        theta = replay_proof(program, atom, solution.proofs[label], theta, subst_mode)
    return theta


def trace_lines(
    program: Program, goal: Goal, solution: Solution, subst_mode: SubstMode | str = SubstMode.STANDARD
) -> tuple[str, ...]:
    """One ``⇝_{κ} atom`` line per step of the solution's proofs, goal order."""
    lines: list[str] = []
    for label, atom in goal:
        replay_proof(program, atom, solution.proofs[label], solution.theta, subst_mode, lines)
    return tuple(lines)
