"""Surface syntax of ``.slf`` problem files.

A file is a sequence of items, each ending with a dot::

    -- comments run to the end of the line
    bool : type .
    == : bool -> bool -> type .
    refl : Pi (b : bool) . b == b .
    ctx m : maybe_A tt .
    refine (elim_maybe_A tt m) (\\ (w : ?A) . ?b) .

Binders (``Pi``, ``\\``) extend as far right as possible; as arguments
they need parentheses. ``A -> B`` is a Π whose body ignores the binder,
``a == b`` applies the ``==`` type constant, binding looser than
application and tighter than the arrow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from ..errors import ParseError

GRAMMAR = r"""
    start: item*

    ?item: decl | context | problem

    decl: decl_name ":" expr "."
    decl_name: NAME | EQ
    context: "ctx" binding ("," binding)* "."
    binding: NAME ":" expr
    problem: "refine" expr "."

    ?expr: binder | arrow
    ?binder: PI "(" NAME ":" expr ")" "." expr   -> pi
           | "\\" "(" NAME ":" expr ")" "." expr -> lam
    ?arrow: eq_expr "->" expr                   -> arrow
          | eq_expr
    ?eq_expr: app EQ app                        -> equals
            | app
    ?app: app atom                              -> application
        | atom
    ?atom: NAME                                 -> name
         | HOLE                                 -> hole
         | "type"                               -> type_kind
         | "(" expr ")"

    PI.2: /Pi(?![A-Za-z0-9_'])|Π/
    EQ: "=="
    NAME: /[A-Za-z_][A-Za-z0-9_']*(?:(?<=_)==)?/
    HOLE: /\?[A-Za-z_][A-Za-z0-9_']*/

    %ignore /--[^\n]*/
    %import common.WS
    %ignore WS
"""


# ──────────────────────────────────────────────────────────────────────────────
# Named surface syntax
# ──────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SName:
    name: str


@dataclass(frozen=True)
class SHole:
    name: str


@dataclass(frozen=True)
class SType:
    pass


@dataclass(frozen=True)
class SApp:
    fun: "NamedExpr"
    arg: "NamedExpr"


@dataclass(frozen=True)
class SPi:
    binder: str
    domain: "NamedExpr"
    body: "NamedExpr"


@dataclass(frozen=True)
class SLam:
    binder: str
    domain: "NamedExpr"
    body: "NamedExpr"


@dataclass(frozen=True)
class SArrow:
    domain: "NamedExpr"
    codomain: "NamedExpr"


@dataclass(frozen=True)
class SEquals:
    left: "NamedExpr"
    right: "NamedExpr"


NamedExpr = Union[SName, SHole, SType, SApp, SPi, SLam, SArrow, SEquals]


@dataclass(frozen=True)
class Declaration:
    name: str
    expr: NamedExpr
    line: int = 0


@dataclass(frozen=True)
class ProblemFile:
    declarations: tuple[Declaration, ...] = ()
    context: tuple[tuple[str, NamedExpr], ...] = ()
    problem: Optional[NamedExpr] = None


class _ToSurface(Transformer):
    def name(self, args):
        return SName(str(args[0]))

    def hole(self, args):
        return SHole(str(args[0])[1:])

    def type_kind(self, _):
        return SType()

    def application(self, args):
        return SApp(*args)

    def equals(self, args):
        left, _, right = args
        return SEquals(left, right)

    def arrow(self, args):
        return SArrow(*args)

    def pi(self, args):
        _, binder, domain, body = args
        return SPi(str(binder), domain, body)

    def lam(self, args):
        binder, domain, body = args
        return SLam(str(binder), domain, body)

    def decl_name(self, args):
        return args[0]

    @v_args(meta=True)
    def decl(self, meta, args):
        name, expr = args
        return Declaration(str(name), expr, getattr(meta, "line", 0))

    def binding(self, args):
        return (str(args[0]), args[1])

    def context(self, args):
        return ("context", tuple(args))

    def problem(self, args):
        return ("problem", args[0])


_PARSER = Lark(GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=False)


def _expected(exc: UnexpectedInput) -> tuple[str, ...]:
    if isinstance(exc, UnexpectedToken):
        return tuple(sorted(exc.expected))
    if isinstance(exc, UnexpectedCharacters):
        return tuple(sorted(exc.allowed or ()))
    if isinstance(exc, UnexpectedEOF):
        return tuple(sorted(exc.expected))
    return ()


def parse(source: str) -> ProblemFile:
    """Parse the text of a problem file.

    Raises
    ------
    ParseError
        With the 1-based line and column of the offending input, the tokens
        that would have been accepted there, or a second ``refine``.
    """
    try:
        tree = _PARSER.parse(source)
    except UnexpectedInput as exc:
        line = getattr(exc, "line", -1)
        column = getattr(exc, "column", -1)
        if line in (None, -1):
            line, column = source.count("\n") + 1, 0
        raise ParseError(line, column, _expected(exc)) from None
    declarations = []
    context: list = []
    problem = None
    for item in _ToSurface().transform(tree).children:
        if isinstance(item, Declaration):
            declarations.append(item)
        elif item[0] == "context":
            context.extend(item[1])
        elif problem is not None:
            raise ParseError(source.count("\n") + 1, 0, ("end of input",))
        else:
            problem = item[1]
    return ProblemFile(tuple(declarations), tuple(context), problem)


def parse_expr(source: str) -> NamedExpr:
    """Parse a single expression, as written after ``refine``."""
    return parse(f"refine {source} .").problem


def is_kind(expr: NamedExpr) -> bool:
    """Whether a declaration's classifier is a kind (ends in ``type``)."""
    while isinstance(expr, (SPi, SArrow)):
        expr = expr.body if isinstance(expr, SPi) else expr.codomain
    return isinstance(expr, SType)


__all__ = [
    "GRAMMAR", "Declaration", "NamedExpr", "ProblemFile", "SApp", "SArrow",
    "SEquals", "SHole", "SLam", "SName", "SPi", "SType", "is_kind",
    "parse", "parse_expr",
]
