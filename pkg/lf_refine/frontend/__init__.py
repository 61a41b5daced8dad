"""Concrete syntax: parsing, elaboration, printing, emitting and the CLI."""

from .elaborate import Elaborated, check_elaborated, check_file, elaborate, elaborate_source
from .emit import emit_clause, emit_goal, emit_program
from .parser import NamedExpr, ProblemFile, parse, parse_expr
from .pretty import pretty, pretty_context, pretty_signature

__all__ = [
    "Elaborated", "check_elaborated", "check_file", "elaborate", "elaborate_source",
    "emit_clause", "emit_goal", "emit_program",
    "NamedExpr", "ProblemFile", "parse", "parse_expr",
    "pretty", "pretty_context", "pretty_signature",
]
