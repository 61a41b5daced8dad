"""Translation of refinement problems into goals and signatures into programs."""

from .goals import GenResult, goal_of_term, goal_of_type
from .program import (
    TERM_CLAUSE_PREFIX, TYPE_CLAUSE_PREFIX, base_program, program_of_signature,
    term_constant_clauses, type_constant_clauses,
)

__all__ = [
    "GenResult", "goal_of_term", "goal_of_type",
    "TERM_CLAUSE_PREFIX", "TYPE_CLAUSE_PREFIX", "base_program",
    "program_of_signature", "term_constant_clauses", "type_constant_clauses",
]
