"""Substitutions and first-order unification over the extended syntax.

De Bruijn binders make the algebra first order: ``MLam`` and ``MPiT`` are
ordinary constructors. Bindings are triangular; ``walk`` follows chains
and ``apply_subst`` resolves to a fixpoint.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional

from ..metasyntax import FreshSupply, Meta, MetaId, Node, map_metas, sort_of
from .atoms import HornClause


class Subst:
    """Immutable mapping from metavariable ids to extended values."""

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Optional[Mapping[MetaId, object]] = None):
        self._bindings = dict(bindings or {})

    def __len__(self) -> int:
        return len(self._bindings)

    def __contains__(self, meta_id: MetaId) -> bool:
        return meta_id in self._bindings

    def __iter__(self) -> Iterator[MetaId]:
        return iter(self._bindings)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subst) and self._bindings == other._bindings

    def __hash__(self):
        return hash(frozenset(self._bindings.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v!r}" for k, v in self._bindings.items())
        return f"Subst({{{inner}}})"

    def get(self, meta_id: MetaId):
        return self._bindings.get(meta_id)

    def items(self):
        return self._bindings.items()

    def bind(self, meta_id: MetaId, value) -> "Subst":
        bindings = dict(self._bindings)
        bindings[meta_id] = value
        return Subst(bindings)

    def walk(self, value):
        """Follow bindings while ``value`` is a bound metavariable."""
        while isinstance(value, Meta):
            bound = self._bindings.get(value.id)
            if bound is None:
                return value
            value = bound
        return value

    def restrict(self, ids: Iterable[MetaId]) -> "Subst":
        return Subst({i: apply_subst(self, Meta(i)) for i in ids if i in self._bindings})


EMPTY = Subst()


def apply_subst(theta: Subst, subject):
    """Replace bound metavariables, recursively, until none is left bound."""
    if not len(theta):
        return subject

    def resolve(node: Meta):
        bound = theta.get(node.id)
        if bound is None:
            return None
        return apply_subst(theta, bound)

    return map_metas(subject, resolve)


def compose(first: Subst, second: Subst) -> Subst:
    """Substitution equivalent to applying ``first`` and then ``second``."""
    bindings = {k: apply_subst(second, v) for k, v in first.items()}
    for k, v in second.items():
        bindings.setdefault(k, v)
    return Subst({k: v for k, v in bindings.items() if not (isinstance(v, Meta) and v.id == k)})


def occurs(meta_id: MetaId, value, theta: Subst) -> bool:
    stack = [value]
    while stack:
        node = theta.walk(stack.pop())
        if isinstance(node, Meta):
            if node.id == meta_id:
                return True
        elif isinstance(node, Node):
            stack.extend(getattr(node, name) for name in node.__match_args__)
    return False


def unify(x, y, theta: Subst = EMPTY) -> Optional[Subst]:
    """Most general unifier of ``x`` and ``y`` extending ``theta``.

    Returns None on a constructor clash, an occurs-check failure or a sort
    mismatch between a metavariable and the value it would be bound to.
    """
    bindings: dict = {}
    view = _View(theta, bindings)
    stack = [(x, y)]
    while stack:
        a, b = stack.pop()
        a = _walk(a, bindings, theta)
        b = _walk(b, bindings, theta)
        if a is b:
            continue
        a_meta = isinstance(a, Meta)
        b_meta = isinstance(b, Meta)
        if a_meta and b_meta and a.id == b.id:
            continue
        if a_meta or b_meta:
            var, value = (a, b) if a_meta else (b, a)
            if _sort(value) is not var.id.sort:
                return None
            if not isinstance(value, Meta) and occurs(var.id, value, view):
                return None
            bindings[var.id] = value
            continue
        if type(a) is not type(b):
            return None
        if isinstance(a, Node):
            names = a.__match_args__
            for name in reversed(names):
                stack.append((getattr(a, name), getattr(b, name)))
        elif a != b:
            return None
    if not bindings:
        return theta
    merged = dict(theta.items())
    merged.update(bindings)
    return Subst(merged)


class _View:
    """Read-only union of a base substitution and pending bindings."""

    __slots__ = ("_base", "_extra")

    def __init__(self, base: Subst, extra: dict):
        self._base = base
        self._extra = extra

    def walk(self, value):
        return _walk(value, self._extra, self._base)


def _walk(value, extra: dict, base: Subst):
    while isinstance(value, Meta):
        bound = extra.get(value.id)
        if bound is None:
            bound = base.get(value.id)
        if bound is None:
            return value
        value = bound
    return value


def rename_clause(clause: HornClause, supply: FreshSupply) -> HornClause:
    """Standardize a clause apart: every metavariable gets a fresh id."""
    renaming: dict[MetaId, Meta] = {}

    def rename(node: Meta):
        fresh_meta = renaming.get(node.id)
        if fresh_meta is None:
            fresh_meta = Meta(supply.fresh(node.id.sort, node.id.hint))
            renaming[node.id] = fresh_meta
        return fresh_meta

    return HornClause(clause.name, map_metas(clause.head, rename), map_metas(clause.body, rename))


def _sort(value):
    try:
        return sort_of(value)
    except KeyError:
        return None
