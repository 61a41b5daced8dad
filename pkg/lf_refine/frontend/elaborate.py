"""Names to de Bruijn indices.

Elaboration walks the surface syntax with a scope of binder names
(innermost last). A name resolves to the nearest binder or context entry
first, then to a constant declared *earlier* in the file. Whether an
expression is read as a term, a type or a kind is fixed by its position;
holes take the sort of the position they occupy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from utils.logger import get_logger

from ..errors import DuplicateDeclaration, SignatureIllFormed, SortMismatch, UnboundName
from ..kernel.ops import SubstMode
from ..kernel.checking import check_ground_problem, validate_context, validate_signature
from ..kernel.syntax import Context, Signature, TermDecl, Ty, TypeDecl
from ..metasyntax import (
    FreshSupply, MApp, MConst, Meta, MetaId, MLam, MPiK, MPiT, MTerm, MTyApp,
    MTyConst, MTYPE, Sort, to_kernel, var,
)
from .parser import (
    NamedExpr, ProblemFile, SApp, SArrow, SEquals, SHole, SLam, SName, SPi,
    SType, is_kind, parse,
)

log = get_logger(__name__)

EQUALITY_CONSTANT = "=="

# Position a surface expression is elaborated at
TERM, TYPE, KIND = "term", "type", "kind"


@dataclass(frozen=True)
class Elaborated:
    """A problem file in nameless form.

    ``context_names`` are the context's binder names, outermost first, for
    printing results. ``holes`` maps each surface hole name to its
    metavariable, and ``hole_scopes`` gives, for each hole, the binder names in scope where
    it first occurs, context names included.
    """

    signature: Signature
    context: Context
    problem: Optional[MTerm]
    context_names: tuple[str, ...] = ()
    holes: dict[str, MetaId] = field(default_factory=dict)
    hole_scopes: dict[MetaId, tuple[str, ...]] = field(default_factory=dict)
    supply: FreshSupply = field(default_factory=FreshSupply, compare=False)


class _Elaborator:
    def __init__(self, sig: Signature, supply: FreshSupply, allow_holes: bool):
        self.sig = sig
        self.supply = supply
        self.allow_holes = allow_holes
        self.holes: dict[str, MetaId] = {}
        self.scopes: dict[MetaId, tuple[str, ...]] = {}

    def hole(self, name: str, sort: Sort, scope: list) -> MetaId:
        if not self.allow_holes:
            raise SortMismatch(f"?{name}", "ground declaration")
        meta_id = self.holes.get(name)
        if meta_id is None:
            meta_id = self.supply.fresh(sort, hint=name)
            self.holes[name] = meta_id
        elif meta_id.sort is not sort:
            raise SortMismatch(f"?{name}", sort.value)
        self.scopes.setdefault(meta_id, tuple("_" if b is None else b for b in scope))
        return meta_id

    def lookup_var(self, scope: list, name: str):
        for depth, bound in enumerate(reversed(scope)):
            if bound == name:
                return var(depth)
        return None

    # -- positions -----------------------------------------------------------

    def kind(self, scope: list, expr: NamedExpr):
        match expr:
            case SType():
                return MTYPE
            case SPi(binder, domain, body):
                return MPiK(self.type(scope, domain), self.kind(scope + [binder], body))
            case SArrow(domain, codomain):
                return MPiK(self.type(scope, domain), self.kind(scope + [None], codomain))
        raise SortMismatch(_describe(expr), KIND)

    def type(self, scope: list, expr: NamedExpr):
        match expr:
            case SName(name):
                if self.lookup_var(scope, name) is not None or self.sig.lookup_term(name) is not None:
                    raise SortMismatch(name, TYPE)
                if self.sig.lookup_type(name) is None:
                    raise UnboundName(name)
                return MTyConst(name)
            case SHole(name):
                return Meta(self.hole(name, Sort.TYPE, scope))
            case SApp(fun, arg):
                return MTyApp(self.type(scope, fun), self.term(scope, arg))
            case SPi(binder, domain, body):
                return MPiT(self.type(scope, domain), self.type(scope + [binder], body))
            case SArrow(domain, codomain):
                return MPiT(self.type(scope, domain), self.type(scope + [None], codomain))
            case SEquals(left, right):
                if self.sig.lookup_type(EQUALITY_CONSTANT) is None:
                    raise UnboundName(EQUALITY_CONSTANT)
                head = MTyApp(MTyConst(EQUALITY_CONSTANT), self.term(scope, left))
                return MTyApp(head, self.term(scope, right))
        raise SortMismatch(_describe(expr), TYPE)

    def term(self, scope: list, expr: NamedExpr):
        match expr:
            case SName(name):
                found = self.lookup_var(scope, name)
                if found is not None:
                    return found
                if self.sig.lookup_term(name) is not None:
                    return MConst(name)
                if self.sig.lookup_type(name) is not None:
                    raise SortMismatch(name, TERM)
                raise UnboundName(name)
            case SHole(name):
                return Meta(self.hole(name, Sort.TERM, scope))
            case SApp(fun, arg):
                if isinstance(fun, SHole):
                    log.warning("Hole ?%s at an application head is read as a term hole", fun.name)
                return MApp(self.term(scope, fun), self.term(scope, arg))
            case SLam(binder, domain, body):
                return MLam(self.type(scope, domain), self.term(scope + [binder], body))
        raise SortMismatch(_describe(expr), TERM)


def _describe(expr: NamedExpr) -> str:
    match expr:
        case SName(name):
            return name
        case SHole(name):
            return f"?{name}"
        case SType():
            return "type"
        case SPi() | SArrow():
            return "Pi"
        case SLam():
            return "\\"
        case SEquals():
            return EQUALITY_CONSTANT
    return type(expr).__name__


def elaborate(file: ProblemFile) -> Elaborated:
    """Resolve the names of a parsed problem file.

    Declarations are elaborated in order, each seeing only the constants
    before it; context entries see the entries to their left.

    Raises
    ------
    UnboundName
        A name in the context or problem that is neither bound nor declared.
    SignatureIllFormed
        A declaration mentioning a constant not declared before it.
    DuplicateDeclaration
        A constant or context name given twice.
    SortMismatch
        An expression in a position of the wrong sort, a hole reused at
        another sort, or a hole in a declaration or context entry.
    """
    sig = Signature()
    supply = FreshSupply()
    for position, decl in enumerate(file.declarations):
        if decl.name in sig:
            raise DuplicateDeclaration(decl.name)
        elab = _Elaborator(sig, supply, allow_holes=False)
        try:
            if is_kind(decl.expr):
                entry = TypeDecl(to_kernel(elab.kind([], decl.expr)))
            else:
                entry = TermDecl(to_kernel(elab.type([], decl.expr)))
        except UnboundName as exc:
            raise SignatureIllFormed(position, decl.name, str(exc)) from exc
        sig = sig.extend(decl.name, entry)
    log.debug("Elaborated %d declarations", len(sig))

    names: list[str] = []
    entries: list[Ty] = []
    for name, expr in file.context:
        if name in names:
            raise DuplicateDeclaration(name)
        entries.append(to_kernel(_Elaborator(sig, supply, allow_holes=False).type(list(names), expr)))
        names.append(name)

    problem = None
    holes: dict[str, MetaId] = {}
    scopes: dict[MetaId, tuple[str, ...]] = {}
    if file.problem is not None:
        elab = _Elaborator(sig, supply, allow_holes=True)
        problem = elab.term(list(names), file.problem)
        holes, scopes = elab.holes, elab.scopes
    return Elaborated(sig, Context(tuple(entries)), problem, tuple(names), holes, scopes, supply)


def elaborate_source(source: str) -> Elaborated:
    """``elaborate(parse(source))``."""
    return elaborate(parse(source))


def check_file(source: str, mode: SubstMode | str = SubstMode.STANDARD) -> Optional[Ty]:
    """Kernel-check a ground problem file.

    The signature and context are validated; the problem term, when the
    file has one, must be free of holes and is returned with its type.

    Raises
    ------
    SignatureIllFormed, NotWellFormed, NotGround
        Besides the parse and elaboration errors.
    """
    return check_elaborated(elaborate_source(source), mode)


def check_elaborated(elaborated: Elaborated, mode: SubstMode | str = SubstMode.STANDARD) -> Optional[Ty]:
    if elaborated.problem is None:
        validate_signature(elaborated.signature, mode)
        validate_context(elaborated.signature, elaborated.context, mode)
        return None
    term = to_kernel(elaborated.problem)
    return check_ground_problem(elaborated.signature, elaborated.context, term, mode)
