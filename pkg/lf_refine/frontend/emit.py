"""Programs and goals as logic-program text.

One clause per line, ``head :- b1, …, bn.`` or ``head.`` for facts; one
``goal(Label, Atom).`` line per goal conjunct. Metavariables become
capitalized variables (``M0``, ``A1``, ``G0``, …), numbered per sort in
order of first occurrence: afresh for every clause, once for a whole
goal. Equal inputs give byte-identical text.
"""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Union

from ..config import META_LETTERS
from ..hornlog.atoms import Goal, HornClause, Program
from ..hornlog.printing import format_atom, quote_name
from ..metasyntax import MetaId


class _VariableNames:
    """Assigns ``M0``, ``A0``, … on first sight of each metavariable."""

    def __init__(self):
        self.assigned: dict[MetaId, str] = {}
        self.counters: defaultdict[str, int] = defaultdict(int)

    def __call__(self, meta_id: MetaId) -> str:
        name = self.assigned.get(meta_id)
        if name is None:
            letter = META_LETTERS[meta_id.sort.value]
            name = f"{letter}{self.counters[letter]}"
            self.counters[letter] += 1
            self.assigned[meta_id] = name
        return name


def emit_clause(clause: HornClause) -> str:
    names = _VariableNames()
    head = format_atom(clause.head, names)
    if not clause.body:
        return f"{head}."
    body = ", ".join(format_atom(atom, names) for atom in clause.body)
    return f"{head} :- {body}."


def emit_program(program: Program) -> str:
    return "".join(f"{emit_clause(clause)}\n" for clause in program)


def emit_goal(goal: Goal) -> str:
    names = _VariableNames()
    return "".join(
        f"goal({quote_name(label.name)}, {format_atom(atom, names)}).\n" for label, atom in goal
    )


def write_text(path: Union[str, Path], text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
