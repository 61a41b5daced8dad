"""Prolog-style text for extended values and atoms.

Shared by search traces and the program emitter. Metavariables are shown
through a caller-supplied naming function.
"""

from __future__ import annotations

import re
from typing import Callable

from ..metasyntax import (
    Cons, MApp, MConst, MetaId, Meta, MLam, MPiK, MPiT, MTyApp, MTyConst,
    MTypeK, MVar, Nil, Node, Succ, Zero,
)
from .atoms import Atom, Top

_PLAIN_NAME = re.compile(r"^[a-z][A-Za-z0-9_]*$")

MetaNamer = Callable[[MetaId], str]


def quote_name(name: str) -> str:
    """Constant name as a Prolog atom, single-quoted unless plain."""
    if _PLAIN_NAME.match(name):
        return name
    escaped = name.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def format_value(value, name_of: MetaNamer = str) -> str:
    match value:
        case Meta(meta_id):
            return name_of(meta_id)
        case Zero():
            return "z"
        case Succ(pred):
            return f"s({format_value(pred, name_of)})"
        case MVar(index):
            return format_value(index, name_of)
        case MConst(name):
            return f"const({quote_name(name)})"
        case MTyConst(name):
            return f"tyconst({quote_name(name)})"
        case MTypeK():
            return "typek"
        case Nil():
            return "nil"
    functor = {
        MApp: "app", MLam: "lam", MPiT: "pi", MTyApp: "tyapp", MPiK: "pik",
        Cons: "cons",
    }.get(type(value))
    if functor is None:
        raise TypeError(f"cannot print {value!r}")
    args = ", ".join(format_value(getattr(value, f), name_of) for f in value.__match_args__)
    return f"{functor}({args})"


def format_atom(atom: Atom, name_of: MetaNamer = str) -> str:
    if isinstance(atom, Top):
        return atom.predicate
    if not isinstance(atom, Node):
        raise TypeError(f"not an atom: {atom!r}")
    args = ", ".join(format_value(getattr(atom, f), name_of) for f in atom.__match_args__)
    return f"{atom.predicate}({args})"
