"""Nameless LF syntax: kinds, types, terms, signatures and contexts.

Variables are de Bruijn indices (``Var(0)`` is the innermost binder). All
nodes are frozen dataclasses, so structural equality is syntactic
equality and values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union


# ──────────────────────────────────────────────────────────────────────────────
# Kinds, types, terms
# ──────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class TypeK:
    """The kind ``type``."""


@dataclass(frozen=True, slots=True)
class PiK:
    domain: "Ty"
    body: "Kind"


@dataclass(frozen=True, slots=True)
class TyConst:
    name: str


@dataclass(frozen=True, slots=True)
class TyApp:
    head: "Ty"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class PiT:
    domain: "Ty"
    body: "Ty"


@dataclass(frozen=True, slots=True)
class Const:
    name: str


@dataclass(frozen=True, slots=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"de Bruijn index must be non-negative, got {self.index}")


@dataclass(frozen=True, slots=True)
class Lam:
    annot: "Ty"
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


Kind = Union[TypeK, PiK]
Ty = Union[TyConst, TyApp, PiT]
Term = Union[Const, Var, Lam, App]

TYPE = TypeK()


def app_spine(head: Term, *args: Term) -> Term:
    """Left-nested application ``head a1 … an``."""
    for arg in args:
        head = App(head, arg)
    return head


def tyapp_spine(head: Ty, *args: Term) -> Ty:
    for arg in args:
        head = TyApp(head, arg)
    return head


# ──────────────────────────────────────────────────────────────────────────────
# Simple (erased) kinds and types
# ──────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class SimpleTypeK:
    """The simple kind ``type⁻``."""


@dataclass(frozen=True, slots=True)
class Base:
    name: str


@dataclass(frozen=True, slots=True)
class Arrow:
    domain: "SimpleTy"
    codomain: Union["SimpleTy", "SimpleKind"]


SimpleTy = Union[Base, Arrow]
SimpleKind = Union[SimpleTypeK, Arrow]

SIMPLE_TYPE = SimpleTypeK()


# ──────────────────────────────────────────────────────────────────────────────
# Signatures and contexts
# ──────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class TermDecl:
    ty: Ty


@dataclass(frozen=True, slots=True)
class TypeDecl:
    kind: Kind


Decl = Union[TermDecl, TypeDecl]


@dataclass(frozen=True)
class Signature:
    """Ordered constant declarations.

    Term and type constants share one namespace; ``extend`` refuses a name
    that is already declared.
    """

    entries: tuple[tuple[str, Decl], ...] = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        for name, decl in self.entries:
            if name in self._index:
                raise ValueError(f"constant {name!r} declared twice")
            self._index[name] = decl

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[str, Decl]]:
        return iter(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def lookup(self, name: str) -> Optional[Decl]:
        return self._index.get(name)

    def lookup_term(self, name: str) -> Optional[Ty]:
        decl = self._index.get(name)
        return decl.ty if isinstance(decl, TermDecl) else None

    def lookup_type(self, name: str) -> Optional[Kind]:
        decl = self._index.get(name)
        return decl.kind if isinstance(decl, TypeDecl) else None

    def term_constants(self) -> list[tuple[str, Ty]]:
        return [(n, d.ty) for n, d in self.entries if isinstance(d, TermDecl)]

    def type_constants(self) -> list[tuple[str, Kind]]:
        return [(n, d.kind) for n, d in self.entries if isinstance(d, TypeDecl)]

    def extend(self, name: str, decl: Decl) -> "Signature":
        return Signature(self.entries + ((name, decl),))

    def prefix(self, length: int) -> "Signature":
        return Signature(self.entries[:length])


EMPTY_SIGNATURE = Signature()


@dataclass(frozen=True)
class Context:
    """Types of the variables in scope, outermost first.

    The last entry belongs to index 0. Each entry is scoped over the entries
    before it, so ``lookup`` shifts the stored type once per binder crossed.
    """

    entries: tuple[Ty, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Ty]:
        return iter(self.entries)

    def extend(self, ty: Ty) -> "Context":
        return Context(self.entries + (ty,))

    def lookup(self, index: int) -> Optional[Ty]:
        """Type of ``Var(index)`` in this context, or None when out of range."""
        from .ops import shift

        if index < 0 or index >= len(self.entries):
            return None
        ty = self.entries[-1 - index]
        for _ in range(index + 1):
            ty = shift(ty, 0)
        return ty


EMPTY_CONTEXT = Context()
