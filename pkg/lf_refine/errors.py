"""Exception hierarchy shared by every layer of the refinement pipeline.

Each error keeps its structured fields as attributes and builds a readable
message, so callers can either branch on the data or print the error.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


class LFRefineError(Exception):
    """Base class for all library errors."""


# ──────────────────────────────────────────────────────────────────────────────
# Kernel
# ──────────────────────────────────────────────────────────────────────────────

class NotWellFormed(LFRefineError):
    """A kind, type or term was rejected by the kernel.

    ``location`` is a dotted path to the failing subderivation
    (e.g. ``app.arg.lam.body``); empty for the root.
    """

    def __init__(self, message: str, location: Sequence[str] = ()):
        self.reason = message
        self.location = ".".join(location)
        where = f" at {self.location}" if self.location else ""
        super().__init__(f"{message}{where}")


class FuelExhausted(LFRefineError):
    def __init__(self, fuel: int):
        self.fuel = fuel
        super().__init__(f"weak head normalization did not finish within {fuel} steps")


class SignatureIllFormed(LFRefineError):
    """A signature entry failed its prefix check."""

    def __init__(self, position: int, name: str, reason: str):
        self.position = position
        self.name = name
        self.reason = reason
        super().__init__(f"declaration #{position} ({name}) is ill-formed: {reason}")


# ──────────────────────────────────────────────────────────────────────────────
# Metasyntax
# ──────────────────────────────────────────────────────────────────────────────

def _show_ids(ids: Iterable[object]) -> str:
    return ", ".join(sorted(str(i) for i in ids))


class NotGround(LFRefineError):
    def __init__(self, ids: Iterable[object]):
        self.ids = frozenset(ids)
        super().__init__(f"value still contains metavariables: {_show_ids(self.ids)}")


# ──────────────────────────────────────────────────────────────────────────────
# Codegen
# ──────────────────────────────────────────────────────────────────────────────

class UndeclaredConstant(LFRefineError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"constant {name!r} is not declared in the signature")


class UnboundIndex(LFRefineError):
    def __init__(self, index: int, depth: int):
        self.index = index
        self.depth = depth
        super().__init__(f"variable index {index} escapes a context of length {depth}")


# ──────────────────────────────────────────────────────────────────────────────
# Resolver
# ──────────────────────────────────────────────────────────────────────────────

NO_SOLUTION_REASONS = ("exhausted", "depth-limited", "budget")


class NoSolution(LFRefineError):
    """Resolution produced no answer.

    ``reason`` is ``"exhausted"`` when the search space was finite and
    empty, ``"depth-limited"`` when some branch was cut by the depth bound
    and ``"budget"`` when the step budget ran out.
    """

    def __init__(self, reason: str, detail: Optional[str] = None):
        if reason not in NO_SOLUTION_REASONS:
            raise ValueError(f"unknown NoSolution reason {reason!r}")
        self.reason = reason
        self.detail = detail
        extra = f" ({detail})" if detail else ""
        super().__init__(f"no solution: {reason}{extra}")


class ReplayError(LFRefineError):
    def __init__(self, head: str, reason: str):
        self.head = head
        self.reason = reason
        super().__init__(f"proof step {head!r} does not replay: {reason}")


# ──────────────────────────────────────────────────────────────────────────────
# Interpreter
# ──────────────────────────────────────────────────────────────────────────────

class UninterpretableHead(LFRefineError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"proof head {name!r} has no term interpretation")


class ResidualMetas(LFRefineError):
    def __init__(self, ids: Iterable[object]):
        self.ids = frozenset(ids)
        super().__init__(f"solution leaves metavariables unassigned: {_show_ids(self.ids)}")


class ExtractionMismatch(LFRefineError):
    def __init__(self, label: str, from_proof: object, from_subst: object):
        self.label = label
        self.from_proof = from_proof
        self.from_subst = from_subst
        super().__init__(
            f"goal variable {label}: proof interpretation {from_proof} "
            f"disagrees with answer substitution {from_subst}"
        )


class RecheckFailed(LFRefineError):
    def __init__(self, location: str, reason: str):
        self.location = location
        self.reason = reason
        where = f" at {location}" if location else ""
        super().__init__(f"kernel rejected the refined term{where}: {reason}")


# ──────────────────────────────────────────────────────────────────────────────
# Frontend
# ──────────────────────────────────────────────────────────────────────────────

class ParseError(LFRefineError):
    def __init__(self, line: int, column: int, expected: Iterable[str] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        hint = f", expected one of: {' '.join(self.expected)}" if self.expected else ""
        super().__init__(f"parse error at line {line}, column {column}{hint}")


class UnboundName(LFRefineError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound name {name!r}")


class DuplicateDeclaration(LFRefineError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"{name!r} is declared twice")


class SortMismatch(LFRefineError):
    def __init__(self, name: str, expected: str):
        self.name = name
        self.expected = expected
        super().__init__(f"{name!r} cannot be used where a {expected} is expected")


__all__ = [
    "LFRefineError",
    "NotWellFormed",
    "FuelExhausted",
    "SignatureIllFormed",
    "NotGround",
    "UndeclaredConstant",
    "UnboundIndex",
    "NoSolution",
    "NO_SOLUTION_REASONS",
    "ReplayError",
    "UninterpretableHead",
    "ResidualMetas",
    "ExtractionMismatch",
    "RecheckFailed",
    "ParseError",
    "UnboundName",
    "DuplicateDeclaration",
    "SortMismatch",
]
