"""Command-line driver: ``check``, ``refine`` and ``emit`` on ``.slf`` files.

Results go to stdout, diagnostics and search traces to stderr. The exit
status tells the outcome apart:

==== =====================================================================
0    success
1    no solution (search exhausted, depth-limited or out of budget)
2    parse or elaboration error, or a problem the goal generator rejects
3    ill-formed signature, or an ill-formed context or term
4    the kernel rejected a refined term
==== =====================================================================
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from utils.logger import get_logger

from ..codegen.goals import goal_of_term
from ..codegen.program import program_of_signature
from ..config import ALL_SOLUTIONS_CAP, DEFAULT_SUBST_MODE, MAX_DEPTH, MAX_STEPS, SUBST_MODES
from ..errors import (
    DuplicateDeclaration, ExtractionMismatch, FuelExhausted, LFRefineError, NoSolution,
    NotGround, NotWellFormed, ParseError, RecheckFailed, ResidualMetas, SignatureIllFormed,
    SortMismatch, UnboundIndex, UnboundName, UndeclaredConstant,
)
from ..interpreter import refine_all
from ..kernel.checking import validate_context, validate_signature
from ..metasyntax import FreshSupply, embed_context, metas
from ..resolver import SolveConfig, Strategy
from .elaborate import Elaborated, check_elaborated, elaborate_source
from .emit import emit_goal, emit_program, write_text
from .pretty import pretty

log = get_logger(__name__)

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INPUT_ERROR = 2
EXIT_ILL_FORMED = 3
EXIT_RECHECK_FAILED = 4

_EXIT_CODES = (
    ((NoSolution, ResidualMetas), EXIT_NO_SOLUTION),
    ((ParseError, UnboundName, DuplicateDeclaration, SortMismatch, UndeclaredConstant,
      UnboundIndex, NotGround), EXIT_INPUT_ERROR),
    ((SignatureIllFormed, NotWellFormed), EXIT_ILL_FORMED),
    ((RecheckFailed, ExtractionMismatch, FuelExhausted), EXIT_RECHECK_FAILED),
)


def exit_code_for(error: LFRefineError) -> int:
    for classes, code in _EXIT_CODES:
        if isinstance(error, classes):
            return code
    return EXIT_NO_SOLUTION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lf-refine",
        description="Type inference and term synthesis for LF through Horn clause resolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Kernel-check a ground problem file.")
    check.add_argument("file", type=Path)
    check.add_argument("--subst-mode", choices=SUBST_MODES, default=DEFAULT_SUBST_MODE)

    refine = sub.add_parser("refine", help="Fill the holes of the file's problem.")
    refine.add_argument("file", type=Path)
    refine.add_argument("--depth", type=int, default=MAX_DEPTH, help="Largest derivation size searched.")
    refine.add_argument(
        "--all", nargs="?", type=int, const=ALL_SOLUTIONS_CAP, default=None, metavar="N",
        help=f"Enumerate up to N distinct refinements (default {ALL_SOLUTIONS_CAP}).",
    )
    refine.add_argument("--trace", action="store_true", help="Print resolution steps to stderr.")
    refine.add_argument("--no-recheck", action="store_true", help="Skip the kernel recheck.")
    refine.add_argument("--subst-mode", choices=SUBST_MODES, default=DEFAULT_SUBST_MODE)
    refine.add_argument("--pure-clauses", action="store_true",
                        help="Resolve shift/subst/whr atoms by clauses only.")
    refine.add_argument("--strategy", choices=[s.value for s in Strategy],
                        default=Strategy.ITERATIVE_DEEPENING.value)
    refine.add_argument("--max-steps", type=int, default=MAX_STEPS)

    emit = sub.add_parser("emit", help="Write the clause program and goal as logic-program text.")
    emit.add_argument("file", type=Path)
    emit.add_argument("--program", type=Path, help="Output file for the clauses.")
    emit.add_argument("--goal", type=Path, help="Output file for the goal.")
    emit.add_argument("--printed-shape", action="store_true",
                      help="Leave out the typing clauses of type constants.")
    emit.add_argument("--subst-mode", choices=SUBST_MODES, default=DEFAULT_SUBST_MODE)
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(0, 0, (f"readable file ({exc.strerror})",)) from exc


# ──────────────────────────────────────────────────────────────────────────────
# Subcommands
# ──────────────────────────────────────────────────────────────────────────────

def _run_check(args) -> int:
    elaborated = elaborate_source(_read(args.file))
    ty = check_elaborated(elaborated, args.subst_mode)
    if ty is None:
        print("ok: signature and context are well-formed")
    else:
        constants = [name for name, _ in elaborated.signature]
        print(f"ok: {pretty(ty, elaborated.context_names, constants)}")
    return EXIT_OK


def _show_refinement(elaborated: Elaborated, refinement) -> list[str]:
    """One line per filled hole, printed with the names in scope at the hole."""
    lines = []
    constants = [name for name, _ in elaborated.signature]
    for assignment in (refinement.rho, refinement.big_r):
        for meta_id in sorted(assignment, key=lambda m: m.sort_key()):
            names = elaborated.hole_scopes.get(meta_id, elaborated.context_names)
            lines.append(f"  {meta_id} := {pretty(assignment[meta_id], names, constants)}")
    return lines


def _run_refine(args) -> int:
    elaborated = elaborate_source(_read(args.file))
    if elaborated.problem is None:
        raise ParseError(0, 0, ("refine directive",))
    validate_signature(elaborated.signature, args.subst_mode)
    validate_context(elaborated.signature, elaborated.context, args.subst_mode)
    config = SolveConfig(
        max_depth=args.depth,
        strategy=args.strategy,
        max_solutions=args.all or 1,
        trace=args.trace,
        pure_clauses=args.pure_clauses,
        subst_mode=args.subst_mode,
        max_steps=args.max_steps,
    )
    log.info("Refining %s", args.file)
    outcomes = refine_all(
        elaborated.signature, elaborated.context, elaborated.problem, config,
        recheck=not args.no_recheck,
    )
    names = elaborated.context_names
    constants = [name for name, _ in elaborated.signature]
    for number, outcome in enumerate(outcomes, start=1):
        if args.all is not None:
            print(f"solution {number}:")
        print(f"term: {pretty(outcome.refined_term, names, constants)}")
        print(f"type: {pretty(outcome.inferred_type, names, constants)}")
        print("refinement:")
        for line in _show_refinement(elaborated, outcome.refinement):
            print(line)
        print(f"rechecked: {str(outcome.rechecked).lower()}")
        for line in outcome.solution.trace:
            print(line, file=sys.stderr)
    return EXIT_OK


def _run_emit(args) -> int:
    elaborated = elaborate_source(_read(args.file))
    program = program_of_signature(
        elaborated.signature, args.subst_mode, type_constant_typing=not args.printed_shape
    )
    program_text = emit_program(program)
    if args.program:
        write_text(args.program, program_text)
        log.info("Wrote %d clauses to %s", len(program), args.program)
    if args.goal:
        if elaborated.problem is None:
            raise ParseError(0, 0, ("refine directive",))
        supply = FreshSupply()
        supply.reserve(metas(elaborated.problem))
        gen = goal_of_term(elaborated.signature, embed_context(elaborated.context), elaborated.problem, supply)
        write_text(args.goal, emit_goal(gen.goal))
        log.info("Wrote a goal of %d conjuncts to %s", len(gen.goal), args.goal)
    if not args.program and not args.goal:
        sys.stdout.write(program_text)
    return EXIT_OK


_COMMANDS = {"check": _run_check, "refine": _run_refine, "emit": _run_emit}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LFRefineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except Exception:  # pylint: disable=broad-except
        log.exception("Unexpected failure in %s", args.command)
        return EXIT_NO_SOLUTION


if __name__ == "__main__":
    sys.exit(main())
