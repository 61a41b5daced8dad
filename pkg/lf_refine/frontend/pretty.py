"""Printing nameless values back in surface syntax.

Output re-parses to the same nameless value. Binders get generated names
``x0``, ``x1``, … that avoid every name already visible; a Π whose body
does not use its binder is printed as an arrow, and ``== a b`` as
``a == b``.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from ..kernel.syntax import (
    App, Const, Context, Lam, PiK, PiT, Signature, TermDecl, TyApp, TyConst,
    TypeK, Var,
)
from ..metasyntax import (
    Meta, MApp, MConst, MLam, MPiK, MPiT, MTyApp, MTyConst, MTypeK, MVar,
    Succ, embed, index_value,
)
from .elaborate import EQUALITY_CONSTANT

_KERNEL_NODES = (App, Const, Lam, PiK, PiT, TyApp, TyConst, TypeK, Var)

# precedence levels, loosest first
_BINDER, _EQUALS, _APP, _ATOM = range(4)


def _mentions(value, depth: int) -> bool:
    """Whether free index ``depth`` may occur in ``value``."""
    match value:
        case MVar(index):
            n = index_value(index)
            return n is None or n == depth
        case MLam(annot, body):
            return _mentions(annot, depth) or _mentions(body, depth + 1)
        case MPiT(domain, body) | MPiK(domain, body):
            return _mentions(domain, depth) or _mentions(body, depth + 1)
        case MApp(fun, arg):
            return _mentions(fun, depth) or _mentions(arg, depth)
        case MTyApp(head, arg):
            return _mentions(head, depth) or _mentions(arg, depth)
    return False


def _show_index(index) -> str:
    parts = 0
    while isinstance(index, Succ):
        parts += 1
        index = index.pred
    inner = str(index.id) if isinstance(index, Meta) else str(index_value(index))
    return f"#{inner}" if not parts else f"#s{parts}({inner})"


class _Printer:
    def __init__(self, free_names: Sequence[str], avoid: Iterable[str]):
        self.free_names = list(free_names)
        self.taken = set(free_names) | set(avoid)

    def fresh(self, scope: list) -> str:
        used = self.taken | {name for name in scope if name}
        k = len([name for name in scope if name])
        while f"x{k}" in used:
            k += 1
        return f"x{k}"

    def name_of(self, scope: list, n: int) -> str:
        if n < len(scope):
            return scope[-1 - n]
        free = n - len(scope)
        if free < len(self.free_names):
            return self.free_names[-1 - free]
        return f"#{free}"

    def show(self, value, scope: list, level: int) -> str:
        text, own = self.render(value, scope)
        return f"({text})" if own < level else text

    def binder(self, keyword: str, domain, body, scope: list) -> tuple[str, int]:
        if keyword == "Pi" and not _mentions(body, 0):
            dom = self.show(domain, scope, _EQUALS)
            return f"{dom} -> {self.show(body, scope + [None], _BINDER)}", _BINDER
        name = self.fresh(scope)
        dom = self.show(domain, scope, _BINDER)
        return f"{keyword} ({name} : {dom}) . {self.show(body, scope + [name], _BINDER)}", _BINDER

    def render(self, value, scope: list) -> tuple[str, int]:
        match value:
            case Meta(meta_id):
                return str(meta_id), _ATOM
            case MConst(name) | MTyConst(name):
                return name, _ATOM
            case MTypeK():
                return "type", _ATOM
            case MVar(index):
                n = index_value(index)
                if n is None:
                    return _show_index(index), _ATOM
                return self.name_of(scope, n), _ATOM
            case MTyApp(MTyApp(MTyConst(name), left), right) if name == EQUALITY_CONSTANT:
                return f"{self.show(left, scope, _APP)} == {self.show(right, scope, _APP)}", _EQUALS
            case MApp(fun, arg) | MTyApp(fun, arg):
                return f"{self.show(fun, scope, _APP)} {self.show(arg, scope, _ATOM)}", _APP
            case MLam(annot, body):
                return self.binder("\\", annot, body, scope)
            case MPiT(domain, body) | MPiK(domain, body):
                return self.binder("Pi", domain, body, scope)
        raise TypeError(f"cannot print {value!r}")


def pretty(subject, names: Optional[Sequence[str]] = None, avoid: Iterable[str] = ()) -> str:
    """Surface text of a kernel or extended value.

    Parameters
    ----------
    subject
        Kind, type or term, kernel or extended.
    names : sequence of str, optional
        Names of the free variables, outermost first (as in a context), so
        ``Var 0`` prints as ``names[-1]``.
    avoid : iterable of str
        Further names generated binders must not take, typically the
        signature's constants.
    """
    if isinstance(subject, _KERNEL_NODES):
        subject = embed(subject)
    return _Printer(names or (), avoid).show(subject, [], _BINDER)


def pretty_signature(sig: Signature) -> str:
    """One ``name : classifier .`` line per declaration."""
    constants = [name for name, _ in sig]
    lines = []
    for name, decl in sig:
        classifier = decl.ty if isinstance(decl, TermDecl) else decl.kind
        lines.append(f"{name} : {pretty(classifier, avoid=constants)} .")
    return "\n".join(lines) + ("\n" if lines else "")


def pretty_context(ctx: Context, names: Sequence[str], avoid: Iterable[str] = ()) -> str:
    """The ``ctx`` line of a problem file, empty for an empty context."""
    if not len(ctx):
        return ""
    avoid = list(avoid)
    bindings = [
        f"{name} : {pretty(entry, names[:position], avoid)}"
        for position, (name, entry) in enumerate(zip(names, ctx.entries))
    ]
    return f"ctx {', '.join(bindings)} .\n"
