"""Proof-relevant Horn clause logic over the extended LF syntax."""

from .atoms import (
    COMPUTED_ATOMS, EQUALITY_ATOMS, SUBJECT_ATOMS, TOP, Atom, EqKind,
    EqTermAlg, EqTermStruct, EqType, Goal, GoalVar, HornClause, Program,
    Proj, ProofTerm, ShiftEq, SubstEq, TermOf, Top, TypeOf, Whr, subject_of,
)
from .printing import format_atom, format_value, quote_name
from .unify import EMPTY, Subst, apply_subst, compose, occurs, rename_clause, unify

__all__ = [
    "COMPUTED_ATOMS", "EQUALITY_ATOMS", "SUBJECT_ATOMS", "TOP", "Atom",
    "EqKind", "EqTermAlg", "EqTermStruct", "EqType", "Goal", "GoalVar",
    "HornClause", "Program", "Proj", "ProofTerm", "ShiftEq", "SubstEq",
    "TermOf", "Top", "TypeOf", "Whr", "subject_of",
    "EMPTY", "Subst", "apply_subst", "compose", "occurs", "rename_clause",
    "unify", "format_atom", "format_value", "quote_name",
]
