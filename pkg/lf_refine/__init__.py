"""LF refinement through proof-relevant Horn clause resolution.

Exposes:
* The trusted nameless kernel (``kernel``)
* Extended syntax with metavariables (``metasyntax``)
* Goal and program generation (``codegen``) and resolution (``resolver``)
* Proof interpretation and the ``refine`` pipeline (``interpreter``)
* Surface syntax, printers and the CLI (``frontend``)

Every synthesized term is re-verified by the kernel before it is
returned.
"""

from .errors import LFRefineError, NoSolution, RecheckFailed
from .frontend import elaborate, emit_goal, emit_program, parse, pretty
from .interpreter import RefineOutcome, TypeRefineOutcome, refine, refine_all, refine_type
from .resolver import SolveConfig, Solution, Strategy, solve_goal

__version__ = "0.1.0"

__all__ = [
    "LFRefineError", "NoSolution", "RecheckFailed",
    "elaborate", "emit_goal", "emit_program", "parse", "pretty",
    "RefineOutcome", "TypeRefineOutcome", "refine", "refine_all", "refine_type",
    "SolveConfig", "Solution", "Strategy", "solve_goal",
]
