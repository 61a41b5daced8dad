"""Goal generation: an extended term or type becomes a conjunction of atoms.

Each syntactic node contributes its premises left to right, followed by
the side conditions of its rule; the result type (or kind) is returned
alongside the goal. Term holes are represented inside the goal by a fresh
subject variable, shared between repeated occurrences of the same hole,
so that every argument position mentioning the hole refers to the value
resolution will synthesize for it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional

from utils.logger import get_logger

from ..errors import UnboundIndex, UndeclaredConstant
from ..hornlog.atoms import (
    TOP, Atom, EqKind, EqType, Goal, GoalVar, ShiftEq, SubstEq, TermOf, TypeOf,
)
from ..kernel.syntax import Signature
from ..metasyntax import (
    MApp, MConst, MContext, MetaId, Meta, MLam, MPiK, MPiT, MTerm, MTy,
    MTYPE, MTyApp, MTyConst, MVar, Cons, FreshSupply, Nil, Sort, ZERO,
    embed, index_value, map_metas,
)

log = get_logger(__name__)


@dataclass(frozen=True)
class GenResult:
    """Generated goal, synthesized type or kind, and the advanced supply.

    ``holes`` maps each term hole of the input to its subject variable.
    """

    goal: Goal
    synthesized: object
    supply: FreshSupply
    holes: Mapping[MetaId, MetaId] = field(default_factory=dict)


@dataclass
class _Pending:
    atom: Atom
    meta: Optional[MetaId] = None
    subject: Optional[MetaId] = None


class _Generator:
    def __init__(self, sig: Signature, supply: FreshSupply):
        self.sig = sig
        self.supply = supply
        self.holes: dict[MetaId, MetaId] = {}
        self.conjuncts: list[_Pending] = []

    # term holes become their subject variables wherever they are copied
    def star(self, value):
        def replace(node: Meta):
            if node.id.sort is not Sort.TERM:
                return None
            return Meta(self._subject_for(node.id))

        return map_metas(value, replace)

    def _subject_for(self, hole: MetaId) -> MetaId:
        subject = self.holes.get(hole)
        if subject is None:
            hint = f"{hole.hint}'" if hole.hint else None
            subject = self.supply.fresh(Sort.TERM, hint)
            self.holes[hole] = subject
        return subject

    def emit(self, atom: Atom, meta: Optional[MetaId] = None, subject: Optional[MetaId] = None):
        self.conjuncts.append(_Pending(atom, meta, subject))

    def term(self, ctx: MContext, m: MTerm) -> MTy:
        match m:
            case MConst(name):
                ty = self.sig.lookup_term(name)
                if ty is None:
                    raise UndeclaredConstant(name)
                self.emit(TOP)
                return embed(ty)
            case Meta(hole) if hole.sort is Sort.TERM:
                subject = self._subject_for(hole)
                ty = self.supply.meta(Sort.TYPE)
                self.emit(TermOf(Meta(subject), ty, ctx), meta=hole, subject=subject)
                return ty
            case MVar(index):
                return self.variable(ctx, m, index_value(index))
            case MLam(annot, body):
                kind = self.type(ctx, annot)
                entry = self.star(annot)
                body_ty = self.term(Cons(entry, ctx), body)
                self.emit(EqKind(kind, MTYPE, ctx))
                return MPiT(entry, body_ty)
            case MApp(fun, arg):
                fun_ty = self.term(ctx, fun)
                arg_ty = self.term(ctx, arg)
                codomain = self.supply.meta(Sort.TYPE)
                result = self.supply.meta(Sort.TYPE)
                self.emit(EqType(fun_ty, MPiT(arg_ty, codomain), MTYPE, ctx))
                self.emit(SubstEq(codomain, self.star(arg), ZERO, result))
                return result
        raise TypeError(f"not an extended term: {m!r}")

    def variable(self, ctx: MContext, m: MVar, n: Optional[int]) -> MTy:
        if n is None or isinstance(ctx, Meta):
            # open index or open context: leave it to the variable clauses
            ty = self.supply.meta(Sort.TYPE)
            self.emit(TermOf(m, ty, ctx))
            return ty
        depth, entry, rest = 0, None, ctx
        for _ in range(n + 1):
            if not isinstance(rest, Cons):
                if isinstance(rest, Nil):
                    raise UnboundIndex(n, depth)
                ty = self.supply.meta(Sort.TYPE)
                self.emit(TermOf(m, ty, ctx))
                return ty
            entry, rest = rest.entry, rest.tail
            depth += 1
        current = entry
        for _ in range(n + 1):
            shifted = self.supply.meta(Sort.TYPE)
            self.emit(ShiftEq(current, ZERO, shifted))
            current = shifted
        return current

    def type(self, ctx: MContext, a: MTy):
        match a:
            case MTyConst(name):
                kind = self.sig.lookup_type(name)
                if kind is None:
                    raise UndeclaredConstant(name)
                self.emit(TOP)
                return embed(kind)
            case Meta(hole) if hole.sort is Sort.TYPE:
                kind = self.supply.meta(Sort.KIND)
                self.emit(TypeOf(a, kind, ctx), meta=hole)
                return kind
            case MPiT(domain, body):
                domain_kind = self.type(ctx, domain)
                body_kind = self.type(Cons(self.star(domain), ctx), body)
                self.emit(EqKind(domain_kind, MTYPE, ctx))
                self.emit(EqKind(body_kind, MTYPE, ctx))
                return MTYPE
            case MTyApp(head, arg):
                head_kind = self.type(ctx, head)
                arg_ty = self.term(ctx, arg)
                codomain = self.supply.meta(Sort.KIND)
                result = self.supply.meta(Sort.KIND)
                self.emit(EqKind(head_kind, MPiK(arg_ty, codomain), ctx))
                self.emit(SubstEq(codomain, self.star(arg), ZERO, result))
                return result
        raise TypeError(f"not an extended type: {a!r}")

    def goal(self) -> Goal:
        seen: Counter = Counter()
        plain = 0
        conjuncts = []
        for pending in self.conjuncts:
            if pending.meta is None:
                plain += 1
                label = GoalVar(f"g{plain}")
            else:
                base = str(pending.meta)
                count = seen[pending.meta]
                seen[pending.meta] += 1
                name = base if count == 0 else f"{base}#{count}"
                label = GoalVar(name, meta=pending.meta, subject=pending.subject)
            conjuncts.append((label, pending.atom))
        return Goal(tuple(conjuncts))


def goal_of_term(sig: Signature, ctx: MContext, m: MTerm, supply: FreshSupply) -> GenResult:
    """Goal whose solutions refine ``m`` in ``ctx``, and ``m``'s type.

    Parameters
    ----------
    sig : Signature
        Well-formed signature declaring every constant of ``m``.
    ctx : MContext
        Extended context, innermost entry first.
    m : MTerm
        Extended term, possibly with term and type holes.
    supply : FreshSupply
        Source of fresh metavariables; must already reserve the input's.

    Returns
    -------
    GenResult

    Raises
    ------
    UndeclaredConstant
        When ``m`` mentions a constant missing from ``sig``.
    UnboundIndex
        When a variable points past the end of a closed context.
    """
    gen = _Generator(sig, supply)
    synthesized = gen.term(ctx, m)
    goal = gen.goal()
    log.debug("goal of %d conjuncts for term", len(goal))
    return GenResult(goal, synthesized, supply, dict(gen.holes))


def goal_of_type(sig: Signature, ctx: MContext, a: MTy, supply: FreshSupply) -> GenResult:
    """Goal whose solutions refine the type ``a``, and ``a``'s kind."""
    gen = _Generator(sig, supply)
    synthesized = gen.type(ctx, a)
    goal = gen.goal()
    log.debug("goal of %d conjuncts for type", len(goal))
    return GenResult(goal, synthesized, supply, dict(gen.holes))
