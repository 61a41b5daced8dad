"""Atoms, clauses, programs, goals and proof terms.

Atoms are ``Node`` subclasses, so the generic traversals of
``lf_refine.metasyntax`` (metavariable collection, mapping) apply to them
unchanged. ``predicate`` is the name used in emitted text.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import ClassVar, Iterator, Optional, Union

from ..metasyntax import (
    MContext, MIndex, MKind, Meta, MetaId, MTerm, MTy, Node,
)


@dataclass(frozen=True, slots=True)
class EqTermAlg(Node):
    m: MTerm
    n: MTerm
    ty: MTy
    ctx: MContext
    predicate: ClassVar[str] = "eq_t_a"


@dataclass(frozen=True, slots=True)
class EqTermStruct(Node):
    m: MTerm
    n: MTerm
    ty: MTy
    ctx: MContext
    predicate: ClassVar[str] = "eq_t_s"


@dataclass(frozen=True, slots=True)
class EqType(Node):
    a: MTy
    b: MTy
    kind: MKind
    ctx: MContext
    predicate: ClassVar[str] = "eq_ty"


@dataclass(frozen=True, slots=True)
class EqKind(Node):
    l1: MKind
    l2: MKind
    ctx: MContext
    predicate: ClassVar[str] = "eq_k"


@dataclass(frozen=True, slots=True)
class TypeOf(Node):
    a: MTy
    kind: MKind
    ctx: MContext
    predicate: ClassVar[str] = "type"


@dataclass(frozen=True, slots=True)
class TermOf(Node):
    m: MTerm
    ty: MTy
    ctx: MContext
    predicate: ClassVar[str] = "term"


@dataclass(frozen=True, slots=True)
class ShiftEq(Node):
    subject: Union[MTerm, MTy, MKind]
    cutoff: MIndex
    result: Union[MTerm, MTy, MKind]
    predicate: ClassVar[str] = "shift"


@dataclass(frozen=True, slots=True)
class SubstEq(Node):
    subject: Union[MTerm, MTy, MKind]
    arg: MTerm
    at: MIndex
    result: Union[MTerm, MTy, MKind]
    predicate: ClassVar[str] = "subst"


@dataclass(frozen=True, slots=True)
class Proj(Node):
    index: MIndex
    ty: MTy
    ctx: MContext
    predicate: ClassVar[str] = "proj"


@dataclass(frozen=True, slots=True)
class Whr(Node):
    source: MTerm
    target: MTerm
    predicate: ClassVar[str] = "whr"


@dataclass(frozen=True, slots=True)
class Top(Node):
    predicate: ClassVar[str] = "top"


Atom = Union[
    EqTermAlg, EqTermStruct, EqType, EqKind, TypeOf, TermOf, ShiftEq, SubstEq,
    Proj, Whr, Top,
]

TOP = Top()

# Subject-family atoms build terms and types; the rest only check.
SUBJECT_ATOMS = (TermOf, TypeOf, Proj)
EQUALITY_ATOMS = (EqTermAlg, EqTermStruct, EqType, EqKind)
COMPUTED_ATOMS = (ShiftEq, SubstEq, Whr)


def subject_of(atom: Atom):
    """The argument whose top functor drives clause selection."""
    match atom:
        case TermOf(m=m) | EqTermAlg(m=m) | EqTermStruct(m=m):
            return m
        case TypeOf(a=a) | EqType(a=a):
            return a
        case EqKind(l1=l1):
            return l1
        case ShiftEq(subject=s) | SubstEq(subject=s):
            return s
        case Proj(index=i):
            return i
        case Whr(source=s):
            return s
    return None


@dataclass(frozen=True)
class HornClause:
    """``name : head ← body₁ ∧ … ∧ bodyₙ``."""

    name: str
    head: Atom
    body: tuple[Atom, ...] = ()

    def __str__(self) -> str:
        return self.name


def _functor_key(value) -> Optional[type]:
    """Top constructor of a value, None for a metavariable (matches anything)."""
    if value is None or isinstance(value, Meta):
        return None
    return type(value)


@dataclass(frozen=True)
class Program:
    """Ordered clauses, indexed by predicate and first functor."""

    clauses: tuple[HornClause, ...] = ()
    _by_name: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)
    _by_predicate: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        grouped = defaultdict(list)
        for clause in self.clauses:
            if clause.name in self._by_name:
                raise ValueError(f"clause name {clause.name!r} used twice")
            self._by_name[clause.name] = clause
            grouped[type(clause.head)].append(clause)
        for predicate, members in grouped.items():
            self._by_predicate[predicate] = tuple(
                (_functor_key(subject_of(c.head)), c) for c in members
            )

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[HornClause]:
        return iter(self.clauses)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def clause(self, name: str) -> HornClause:
        return self._by_name[name]

    def names(self) -> list[str]:
        return [c.name for c in self.clauses]

    def extend(self, clauses) -> "Program":
        return Program(self.clauses + tuple(clauses))

    def candidates(self, atom: Atom, resolved_subject=None) -> Iterator[HornClause]:
        """Clauses whose head predicate and first functor can match, in order.

        ``resolved_subject`` is the atom's subject after substitution; when it
        is a metavariable (or omitted) every clause of the predicate is
        returned.
        """
        key = _functor_key(resolved_subject)
        for clause_key, clause in self._by_predicate.get(type(atom), ()):
            if key is None or clause_key is None or clause_key is key:
                yield clause


@dataclass(frozen=True)
class GoalVar:
    """Label of a goal conjunct.

    ``meta`` is the problem metavariable the conjunct stands for (term or
    type holes); ``subject`` is the fresh logic variable standing in for a
    term hole inside the goal.
    """

    name: str
    meta: Optional[MetaId] = None
    subject: Optional[MetaId] = None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Goal:
    conjuncts: tuple[tuple[GoalVar, Atom], ...] = ()

    def __post_init__(self):
        names = [label.name for label, _ in self.conjuncts]
        if len(set(names)) != len(names):
            raise ValueError("goal labels must be distinct")

    def __len__(self) -> int:
        return len(self.conjuncts)

    def __iter__(self):
        return iter(self.conjuncts)

    @property
    def labels(self) -> tuple[GoalVar, ...]:
        return tuple(label for label, _ in self.conjuncts)

    @property
    def atoms(self) -> tuple[Atom, ...]:
        return tuple(atom for _, atom in self.conjuncts)

    def label(self, name: str) -> GoalVar:
        for label, _ in self.conjuncts:
            if label.name == name:
                return label
        raise KeyError(name)


@dataclass(frozen=True)
class ProofTerm:
    """``κ δ₁ … δₙ``. ``computed`` marks a leaf produced by evaluation."""

    head: str
    args: tuple["ProofTerm", ...] = ()
    computed: bool = False

    def __str__(self) -> str:
        if not self.args:
            return self.head
        return f"{self.head}({', '.join(str(a) for a in self.args)})"

    def size(self) -> int:
        return 1 + sum(a.size() for a in self.args)
