"""Extended nameless LF: kernel syntax plus metavariables of every sort.

The extended values double as the term algebra of the Horn clause logic,
so besides the refinement operations this module provides the generic
traversals (``iter_metas``, ``map_metas``) that unification and the
printers build on. Every node is a frozen dataclass deriving from
``Node``; its ``__match_args__`` lists its children in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .errors import NotGround
from .kernel.syntax import (
    App, Const, Context, Kind, Lam, PiK, PiT, Term, Ty, TyApp, TyConst,
    TypeK, Var,
)


class Sort(str, Enum):
    TERM = "term"
    TYPE = "type"
    KIND = "kind"
    INDEX = "index"
    CONTEXT = "context"


_DISPLAY_PREFIX = {
    Sort.TERM: "m",
    Sort.TYPE: "T",
    Sort.KIND: "L",
    Sort.INDEX: "i",
    Sort.CONTEXT: "G",
}


@dataclass(frozen=True, slots=True)
class MetaId:
    """Identity of a metavariable. The hint is for display only."""

    sort: Sort
    serial: int
    hint: Optional[str] = field(default=None, compare=False)

    def __str__(self) -> str:
        return "?" + (self.hint or f"{_DISPLAY_PREFIX[self.sort]}{self.serial}")

    def sort_key(self) -> tuple[str, int]:
        return (self.sort.value, self.serial)


class Node:
    """Base of every extended syntax node and logic atom."""

    __slots__ = ()
    __match_args__: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Meta(Node):
    id: MetaId

    @property
    def sort(self) -> Sort:
        return self.id.sort


# kinds
@dataclass(frozen=True, slots=True)
class MTypeK(Node):
    pass


@dataclass(frozen=True, slots=True)
class MPiK(Node):
    domain: "MTy"
    body: "MKind"


# types
@dataclass(frozen=True, slots=True)
class MTyConst(Node):
    name: str


@dataclass(frozen=True, slots=True)
class MTyApp(Node):
    head: "MTy"
    arg: "MTerm"


@dataclass(frozen=True, slots=True)
class MPiT(Node):
    domain: "MTy"
    body: "MTy"


# terms
@dataclass(frozen=True, slots=True)
class MConst(Node):
    name: str


@dataclass(frozen=True, slots=True)
class MVar(Node):
    index: "MIndex"


@dataclass(frozen=True, slots=True)
class MLam(Node):
    annot: "MTy"
    body: "MTerm"


@dataclass(frozen=True, slots=True)
class MApp(Node):
    fun: "MTerm"
    arg: "MTerm"


# indices
@dataclass(frozen=True, slots=True)
class Zero(Node):
    pass


@dataclass(frozen=True, slots=True)
class Succ(Node):
    pred: "MIndex"


# contexts, innermost entry first
@dataclass(frozen=True, slots=True)
class Nil(Node):
    pass


@dataclass(frozen=True, slots=True)
class Cons(Node):
    entry: "MTy"
    tail: "MContext"


MKind = Union[MTypeK, MPiK, Meta]
MTy = Union[MTyConst, MTyApp, MPiT, Meta]
MTerm = Union[MConst, MVar, MLam, MApp, Meta]
MIndex = Union[Zero, Succ, Meta]
MContext = Union[Nil, Cons, Meta]
Extended = Union[MKind, MTy, MTerm, MIndex, MContext]

MTYPE = MTypeK()
ZERO = Zero()
NIL = Nil()

_SORT_OF_NODE = {
    MTypeK: Sort.KIND, MPiK: Sort.KIND,
    MTyConst: Sort.TYPE, MTyApp: Sort.TYPE, MPiT: Sort.TYPE,
    MConst: Sort.TERM, MVar: Sort.TERM, MLam: Sort.TERM, MApp: Sort.TERM,
    Zero: Sort.INDEX, Succ: Sort.INDEX,
    Nil: Sort.CONTEXT, Cons: Sort.CONTEXT,
}


def sort_of(value: Extended) -> Sort:
    if isinstance(value, Meta):
        return value.id.sort
    return _SORT_OF_NODE[type(value)]


# ──────────────────────────────────────────────────────────────────────────────
# Indices
# ──────────────────────────────────────────────────────────────────────────────

def index_of(n: int) -> MIndex:
    result: MIndex = ZERO
    for _ in range(n):
        result = Succ(result)
    return result


def index_value(index: MIndex) -> Optional[int]:
    """Numeric value of a metavariable-free index, else None."""
    count = 0
    while isinstance(index, Succ):
        count += 1
        index = index.pred
    return count if isinstance(index, Zero) else None


def var(n: int) -> MVar:
    return MVar(index_of(n))


# ──────────────────────────────────────────────────────────────────────────────
# Generic traversal
# ──────────────────────────────────────────────────────────────────────────────

def iter_metas(subject: object) -> Iterator[MetaId]:
    """Metavariable ids in left-to-right pre-order (repeats included).

    Accepts nodes, atoms, and tuples of them.
    """
    stack = [subject]
    while stack:
        node = stack.pop()
        if isinstance(node, Meta):
            yield node.id
        elif isinstance(node, Node):
            names = node.__match_args__
            for name in reversed(names):
                stack.append(getattr(node, name))
        elif isinstance(node, tuple):
            stack.extend(reversed(node))


def metas(subject: object) -> frozenset[MetaId]:
    return frozenset(iter_metas(subject))


def mvars(subject: object) -> frozenset[MetaId]:
    """Term-sort metavariables of ``subject``."""
    return frozenset(m for m in iter_metas(subject) if m.sort is Sort.TERM)


def mtvars(subject: object) -> frozenset[MetaId]:
    """Type-sort metavariables of ``subject``."""
    return frozenset(m for m in iter_metas(subject) if m.sort is Sort.TYPE)


def is_ground(subject: object) -> bool:
    return next(iter_metas(subject), None) is None


def map_metas(subject, fn: Callable[[Meta], Optional[object]]):
    """Rebuild ``subject`` with each metavariable node replaced by ``fn``.

    ``fn`` returns the replacement or None to keep the node. Unchanged
    subtrees are shared, not copied.
    """
    if isinstance(subject, Meta):
        replacement = fn(subject)
        return subject if replacement is None else replacement
    if isinstance(subject, Node):
        names = subject.__match_args__
        if not names:
            return subject
        old = [getattr(subject, name) for name in names]
        new = [map_metas(child, fn) for child in old]
        if all(a is b for a, b in zip(old, new)):
            return subject
        return type(subject)(*new)
    if isinstance(subject, tuple):
        return tuple(map_metas(child, fn) for child in subject)
    return subject


def node_count(subject: object) -> int:
    """Number of syntax nodes, index successors included."""
    count = 0
    stack = [subject]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            count += 1
            stack.extend(getattr(node, name) for name in node.__match_args__)
    return count


# ──────────────────────────────────────────────────────────────────────────────
# Kernel boundary
# ──────────────────────────────────────────────────────────────────────────────

def embed(value: Union[Term, Ty, Kind]) -> Extended:
    """Lossless image of a kernel value in the extended syntax."""
    match value:
        case Const(name):
            return MConst(name)
        case Var(index):
            return var(index)
        case Lam(annot, body):
            return MLam(embed(annot), embed(body))
        case App(fun, arg):
            return MApp(embed(fun), embed(arg))
        case TyConst(name):
            return MTyConst(name)
        case TyApp(head, arg):
            return MTyApp(embed(head), embed(arg))
        case PiT(domain, body):
            return MPiT(embed(domain), embed(body))
        case TypeK():
            return MTYPE
        case PiK(domain, body):
            return MPiK(embed(domain), embed(body))
    raise TypeError(f"not a kernel value: {value!r}")


def embed_context(ctx: Context) -> MContext:
    result: MContext = NIL
    for entry in ctx.entries:
        result = Cons(embed(entry), result)
    return result


def _to_kernel(value):
    match value:
        case MConst(name):
            return Const(name)
        case MVar(index):
            return Var(index_value(index))
        case MLam(annot, body):
            return Lam(_to_kernel(annot), _to_kernel(body))
        case MApp(fun, arg):
            return App(_to_kernel(fun), _to_kernel(arg))
        case MTyConst(name):
            return TyConst(name)
        case MTyApp(head, arg):
            return TyApp(_to_kernel(head), _to_kernel(arg))
        case MPiT(domain, body):
            return PiT(_to_kernel(domain), _to_kernel(body))
        case MTypeK():
            return TypeK()
        case MPiK(domain, body):
            return PiK(_to_kernel(domain), _to_kernel(body))
    raise TypeError(f"no kernel counterpart for {value!r}")


def to_kernel(value: Extended) -> Union[Term, Ty, Kind]:
    """Project a metavariable-free value to the kernel.

    Raises
    ------
    NotGround
        Listing every residual metavariable.
    """
    residual = metas(value)
    if residual:
        raise NotGround(residual)
    return _to_kernel(value)


def to_kernel_context(ctx: MContext) -> Context:
    entries = []
    while isinstance(ctx, Cons):
        entries.append(to_kernel(ctx.entry))
        ctx = ctx.tail
    if not isinstance(ctx, Nil):
        raise NotGround(metas(ctx))
    return Context(tuple(reversed(entries)))


def context_length(ctx: MContext) -> int:
    length = 0
    while isinstance(ctx, Cons):
        length += 1
        ctx = ctx.tail
    return length


# ──────────────────────────────────────────────────────────────────────────────
# Refinements and fresh names
# ──────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Refinement:
    """Assignment ``(ρ, R)`` of term metas and type metas."""

    rho: Mapping[MetaId, MTerm] = field(default_factory=dict)
    big_r: Mapping[MetaId, MTy] = field(default_factory=dict)

    def __post_init__(self):
        for meta_id in self.rho:
            if meta_id.sort is not Sort.TERM:
                raise ValueError(f"rho only assigns term metavariables, got {meta_id}")
        for meta_id in self.big_r:
            if meta_id.sort is not Sort.TYPE:
                raise ValueError(f"R only assigns type metavariables, got {meta_id}")

    def is_empty(self) -> bool:
        return not self.rho and not self.big_r


def apply_refinement(refinement: Refinement, subject):
    """Replace assigned metavariables; unassigned ones stay in place."""

    def lookup(node: Meta):
        if node.id.sort is Sort.TERM:
            return refinement.rho.get(node.id)
        if node.id.sort is Sort.TYPE:
            return refinement.big_r.get(node.id)
        return None

    return map_metas(subject, lookup)


def compose_refinements(first: Refinement, second: Refinement) -> Refinement:
    """Refinement equivalent to applying ``first`` and then ``second``."""
    rho = {k: apply_refinement(second, v) for k, v in first.rho.items()}
    big_r = {k: apply_refinement(second, v) for k, v in first.big_r.items()}
    for k, v in second.rho.items():
        rho.setdefault(k, v)
    for k, v in second.big_r.items():
        big_r.setdefault(k, v)
    return Refinement(rho, big_r)


class FreshSupply:
    """Monotone per-sort serial counters.

    One supply belongs to one refinement pipeline; it is not thread-safe.
    """

    def __init__(self):
        self._next = {sort: 0 for sort in Sort}

    def fresh(self, sort: Sort, hint: Optional[str] = None) -> MetaId:
        serial = self._next[sort]
        self._next[sort] = serial + 1
        return MetaId(sort, serial, hint)

    def meta(self, sort: Sort, hint: Optional[str] = None) -> Meta:
        return Meta(self.fresh(sort, hint))

    def reserve(self, ids: Iterable[MetaId]) -> None:
        """Never issue any of ``ids`` (or anything below them) again."""
        for meta_id in ids:
            if meta_id.serial >= self._next[meta_id.sort]:
                self._next[meta_id.sort] = meta_id.serial + 1

    def peek(self, sort: Sort) -> int:
        return self._next[sort]


def fresh(supply: FreshSupply, sort: Sort, hint: Optional[str] = None) -> MetaId:
    return supply.fresh(sort, hint)
