"""The fixed clause set encoding the typing rules, and per-signature clauses.

Clause metavariables are numbered per clause; they are renamed apart at
every use by the resolver, so only their sharing pattern matters.
"""

from __future__ import annotations

from functools import lru_cache

from utils.logger import get_logger

from ..hornlog.atoms import (
    EqKind, EqTermAlg, EqTermStruct, EqType, HornClause, Program, Proj,
    ShiftEq, SubstEq, TermOf, Top, TypeOf, Whr,
)
from ..kernel.ops import SubstMode
from ..kernel.syntax import Signature, TermDecl
from ..metasyntax import (
    MApp, MConst, MLam, MPiK, MPiT, MTYPE, MTyApp, MTyConst, MVar, Cons,
    FreshSupply, Meta, Sort, Succ, ZERO, embed,
)

log = get_logger(__name__)

TERM_CLAUSE_PREFIX = "term_"
TYPE_CLAUSE_PREFIX = "type_"


class _ClauseVars:
    """Named metavariables local to one clause."""

    def __init__(self):
        self._supply = FreshSupply()
        self._by_name: dict[str, Meta] = {}

    def _get(self, sort: Sort, name: str) -> Meta:
        meta = self._by_name.get(name)
        if meta is None:
            meta = self._supply.meta(sort, name)
            self._by_name[name] = meta
        return meta

    def term(self, name: str) -> Meta:
        return self._get(Sort.TERM, name)

    def ty(self, name: str) -> Meta:
        return self._get(Sort.TYPE, name)

    def kind(self, name: str) -> Meta:
        return self._get(Sort.KIND, name)

    def idx(self, name: str) -> Meta:
        return self._get(Sort.INDEX, name)

    def ctx(self, name: str) -> Meta:
        return self._get(Sort.CONTEXT, name)


def _clause(name: str, build) -> HornClause:
    v = _ClauseVars()
    head, *body = build(v)
    return HornClause(name, head, tuple(body))


VAR0 = MVar(ZERO)


def _subject_clauses() -> list[HornClause]:
    return [
        _clause("true", lambda v: [Top()]),
        _clause("zero", lambda v: [
            TermOf(VAR0, v.ty("A"), Cons(v.ty("A'"), v.ctx("G"))),
            ShiftEq(v.ty("A'"), ZERO, v.ty("A")),
        ]),
        _clause("succ", lambda v: [
            Proj(Succ(v.idx("i")), v.ty("A"), Cons(v.ty("B"), v.ctx("G"))),
            TermOf(MVar(v.idx("i")), v.ty("A'"), v.ctx("G")),
            ShiftEq(v.ty("A'"), ZERO, v.ty("A")),
        ]),
        _clause("proj", lambda v: [
            TermOf(MVar(v.idx("i")), v.ty("A"), v.ctx("G")),
            Proj(v.idx("i"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("T-elim", lambda v: [
            TypeOf(MTyApp(v.ty("A"), v.term("M")), v.kind("L"), v.ctx("G")),
            TypeOf(v.ty("A"), MPiK(v.ty("A1"), v.kind("L'")), v.ctx("G")),
            TermOf(v.term("M"), v.ty("A2"), v.ctx("G")),
            EqType(v.ty("A1"), v.ty("A2"), MTYPE, v.ctx("G")),
            SubstEq(v.kind("L'"), v.term("M"), ZERO, v.kind("L")),
        ]),
        _clause("T-intro", lambda v: [
            TypeOf(MPiT(v.ty("A"), v.ty("B")), MTYPE, v.ctx("G")),
            TypeOf(v.ty("A"), MTYPE, v.ctx("G")),
            TypeOf(v.ty("B"), MTYPE, Cons(v.ty("A"), v.ctx("G"))),
        ]),
        _clause("t-elim", lambda v: [
            TermOf(MApp(v.term("M"), v.term("N")), v.ty("B"), v.ctx("G")),
            TermOf(v.term("M"), MPiT(v.ty("A1"), v.ty("B'")), v.ctx("G")),
            TermOf(v.term("N"), v.ty("A2"), v.ctx("G")),
            EqType(v.ty("A1"), v.ty("A2"), MTYPE, v.ctx("G")),
            SubstEq(v.ty("B'"), v.term("N"), ZERO, v.ty("B")),
        ]),
        _clause("t-intro", lambda v: [
            TermOf(MLam(v.ty("A"), v.term("M")), MPiT(v.ty("A"), v.ty("B")), v.ctx("G")),
            TypeOf(v.ty("A"), MTYPE, v.ctx("G")),
            TermOf(v.term("M"), v.ty("B"), Cons(v.ty("A"), v.ctx("G"))),
        ]),
    ]


def _equality_clauses() -> list[HornClause]:
    return [
        _clause("eqTintro", lambda v: [
            EqType(MPiT(v.ty("A1"), v.ty("A2")), MPiT(v.ty("B1"), v.ty("B2")), MTYPE, v.ctx("G")),
            EqType(v.ty("A1"), v.ty("B1"), MTYPE, v.ctx("G")),
            EqType(v.ty("A2"), v.ty("B2"), MTYPE, Cons(v.ty("A1"), v.ctx("G"))),
        ]),
        _clause("eqTelim", lambda v: [
            EqType(MTyApp(v.ty("A"), v.term("M")), MTyApp(v.ty("B"), v.term("N")), v.kind("L"), v.ctx("G")),
            EqType(v.ty("A"), v.ty("B"), MPiK(v.ty("C"), v.kind("L")), v.ctx("G")),
            EqTermAlg(v.term("M"), v.term("N"), v.ty("C"), v.ctx("G")),
        ]),
        _clause("eqtzero", lambda v: [
            EqTermStruct(VAR0, VAR0, v.ty("A"), Cons(v.ty("A"), v.ctx("G"))),
        ]),
        _clause("eqtsucc", lambda v: [
            EqTermStruct(MVar(Succ(v.idx("i"))), MVar(Succ(v.idx("j"))), v.ty("A"), Cons(v.ty("B"), v.ctx("G"))),
            EqTermStruct(MVar(v.idx("i")), MVar(v.idx("j")), v.ty("A"), v.ctx("G")),
        ]),
        _clause("eqtrefl", lambda v: [
            EqTermStruct(v.term("a"), v.term("a"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("eqtelim", lambda v: [
            EqTermStruct(MApp(v.term("M1"), v.term("M2")), MApp(v.term("N1"), v.term("N2")), v.ty("B"), v.ctx("G")),
            EqTermStruct(v.term("M1"), v.term("N1"), MPiT(v.ty("A"), v.ty("B")), v.ctx("G")),
            EqTermAlg(v.term("M2"), v.term("N2"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("eqtwhrl", lambda v: [
            EqTermAlg(v.term("M"), v.term("N"), v.ty("A"), v.ctx("G")),
            Whr(v.term("M"), v.term("M'")),
            EqTermAlg(v.term("M'"), v.term("N"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("eqtwhrr", lambda v: [
            EqTermAlg(v.term("M"), v.term("N"), v.ty("A"), v.ctx("G")),
            Whr(v.term("N"), v.term("N'")),
            EqTermAlg(v.term("M"), v.term("N'"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("eqtstr", lambda v: [
            EqTermAlg(v.term("M"), v.term("N"), v.ty("A"), v.ctx("G")),
            EqTermStruct(v.term("M"), v.term("N"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("eqtexp", lambda v: [
            EqTermAlg(v.term("M"), v.term("N"), MPiT(v.ty("A"), v.ty("B")), v.ctx("G")),
            ShiftEq(v.term("M"), ZERO, v.term("M'")),
            ShiftEq(v.term("N"), ZERO, v.term("N'")),
            EqTermAlg(MApp(v.term("M'"), VAR0), MApp(v.term("N'"), VAR0), v.ty("B"), Cons(v.ty("A"), v.ctx("G"))),
        ]),
        _clause("eqsimpl", lambda v: [
            EqTermAlg(v.term("M"), v.term("M'"), MTyApp(v.ty("A"), v.term("N")), v.ctx("G")),
            EqTermAlg(v.term("M"), v.term("M'"), v.ty("A"), v.ctx("G")),
        ]),
        _clause("whrs", lambda v: [
            Whr(MApp(MLam(v.ty("A"), v.term("M")), v.term("N")), v.term("M'")),
            SubstEq(v.term("M"), v.term("N"), ZERO, v.term("M'")),
        ]),
        _clause("whrh", lambda v: [
            Whr(MApp(v.term("M"), v.term("N")), MApp(v.term("M'"), v.term("N"))),
            Whr(v.term("M"), v.term("M'")),
        ]),
    ]


def _shift_subst_clauses(subst_mode: SubstMode) -> list[HornClause]:
    def substgt(v):
        # standard mode decrements the index, verbatim keeps it
        result = MVar(v.idx("i")) if subst_mode is SubstMode.STANDARD else MVar(Succ(v.idx("i")))
        return [SubstEq(MVar(Succ(v.idx("i"))), v.term("N"), ZERO, result)]

    return [
        _clause("shiftTtintro", lambda v: [
            ShiftEq(MPiT(v.ty("A"), v.ty("B")), v.idx("i"), MPiT(v.ty("A'"), v.ty("B'"))),
            ShiftEq(v.ty("A"), v.idx("i"), v.ty("A'")),
            ShiftEq(v.ty("B"), Succ(v.idx("i")), v.ty("B'")),
        ]),
        _clause("shifttintro", lambda v: [
            ShiftEq(MLam(v.ty("A"), v.term("M")), v.idx("i"), MLam(v.ty("A'"), v.term("M'"))),
            ShiftEq(v.ty("A"), v.idx("i"), v.ty("A'")),
            ShiftEq(v.term("M"), Succ(v.idx("i")), v.term("M'")),
        ]),
        _clause("shifttelim", lambda v: [
            ShiftEq(MApp(v.term("M"), v.term("N")), v.idx("i"), MApp(v.term("M'"), v.term("N'"))),
            ShiftEq(v.term("M"), v.idx("i"), v.term("M'")),
            ShiftEq(v.term("N"), v.idx("i"), v.term("N'")),
        ]),
        _clause("shifttgt", lambda v: [
            ShiftEq(MVar(v.idx("i")), ZERO, MVar(Succ(v.idx("i")))),
        ]),
        _clause("shifttpred", lambda v: [
            ShiftEq(VAR0, Succ(v.idx("i")), VAR0),
        ]),
        _clause("shifttstep", lambda v: [
            ShiftEq(MVar(Succ(v.idx("i"))), Succ(v.idx("j")), MVar(Succ(v.idx("k")))),
            ShiftEq(MVar(v.idx("i")), v.idx("j"), MVar(v.idx("k"))),
        ]),
        _clause("substTtintro", lambda v: [
            SubstEq(MPiT(v.ty("A"), v.ty("B")), v.term("N"), v.idx("i"), MPiT(v.ty("A'"), v.ty("B'"))),
            SubstEq(v.ty("A"), v.term("N"), v.idx("i"), v.ty("A'")),
            ShiftEq(v.term("N"), ZERO, v.term("N'")),
            SubstEq(v.ty("B"), v.term("N'"), Succ(v.idx("i")), v.ty("B'")),
        ]),
        _clause("substintro", lambda v: [
            SubstEq(MLam(v.ty("A"), v.term("M")), v.term("N"), v.idx("i"), MLam(v.ty("A'"), v.term("M'"))),
            SubstEq(v.ty("A"), v.term("N"), v.idx("i"), v.ty("A'")),
            ShiftEq(v.term("N"), ZERO, v.term("N'")),
            SubstEq(v.term("M"), v.term("N'"), Succ(v.idx("i")), v.term("M'")),
        ]),
        _clause("substtelim", lambda v: [
            SubstEq(MApp(v.term("M1"), v.term("M2")), v.term("N"), v.idx("i"), MApp(v.term("M1'"), v.term("M2'"))),
            SubstEq(v.term("M1"), v.term("N"), v.idx("i"), v.term("M1'")),
            SubstEq(v.term("M2"), v.term("N"), v.idx("i"), v.term("M2'")),
        ]),
        _clause("substz", lambda v: [
            SubstEq(VAR0, v.term("N"), ZERO, v.term("N")),
        ]),
        _clause("substs", lambda v: [
            SubstEq(VAR0, v.term("N"), Succ(v.idx("i")), VAR0),
        ]),
        _clause("substgt", substgt),
        _clause("substpred", lambda v: [
            SubstEq(MVar(Succ(v.idx("i"))), v.term("N"), Succ(v.idx("j")), MVar(Succ(v.idx("k")))),
            SubstEq(MVar(v.idx("i")), v.term("N"), v.idx("j"), MVar(v.idx("k"))),
        ]),
    ]


def _kind_equality_clauses() -> list[HornClause]:
    return [
        _clause("eqK-type", lambda v: [EqKind(MTYPE, MTYPE, v.ctx("G"))]),
        _clause("eqK-Pi", lambda v: [
            EqKind(MPiK(v.ty("A"), v.kind("L")), MPiK(v.ty("A'"), v.kind("L'")), v.ctx("G")),
            EqType(v.ty("A"), v.ty("A'"), MTYPE, v.ctx("G")),
            EqKind(v.kind("L"), v.kind("L'"), Cons(v.ty("A"), v.ctx("G"))),
        ]),
    ]


@lru_cache(maxsize=None)
def base_program(subst_mode: SubstMode | str = SubstMode.STANDARD) -> Program:
    """The 36 clauses encoding the typing, equality, shift and subst rules.

    Parameters
    ----------
    subst_mode : SubstMode or str, default ``"standard"``
        Selects the reading of the clause substituting at an index above
        the target (see ``lf_refine.kernel.ops``).

    Returns
    -------
    Program
        Clauses in trial order: subject rules, equality and reduction,
        shift and subst, then kind equality.
    """
    mode = SubstMode(subst_mode)
    clauses = (
        _subject_clauses()
        + _equality_clauses()
        + _shift_subst_clauses(mode)
        + _kind_equality_clauses()
    )
    return Program(tuple(clauses))


def term_constant_clauses(name: str, ty) -> list[HornClause]:
    c = MConst(name)
    a = embed(ty)
    return [
        _clause(f"{TERM_CLAUSE_PREFIX}{name}", lambda v: [TermOf(c, a, v.ctx("G"))]),
        _clause(f"shift_{name}", lambda v: [ShiftEq(c, ZERO, c)]),
        _clause(f"subst_{name}", lambda v: [SubstEq(c, v.term("M"), ZERO, c)]),
        _clause(f"eqs_{name}", lambda v: [EqTermStruct(c, c, a, v.ctx("G"))]),
    ]


def type_constant_clauses(name: str, kind, typing: bool = True) -> list[HornClause]:
    alpha = MTyConst(name)
    l = embed(kind)
    clauses = [
        _clause(f"shift_{name}", lambda v: [ShiftEq(alpha, ZERO, alpha)]),
        _clause(f"subst_{name}", lambda v: [SubstEq(alpha, v.term("M"), ZERO, alpha)]),
        _clause(f"eqT_{name}", lambda v: [EqType(alpha, alpha, l, v.ctx("G"))]),
        _clause(f"eqa_{name}", lambda v: [
            EqTermAlg(v.term("N"), v.term("M"), alpha, v.ctx("G")),
            EqTermStruct(v.term("M"), v.term("N"), alpha, v.ctx("G")),
        ]),
    ]
    if typing:
        clauses.insert(0, _clause(f"{TYPE_CLAUSE_PREFIX}{name}", lambda v: [TypeOf(alpha, l, v.ctx("G"))]))
    return clauses


def program_of_signature(
    sig: Signature,
    subst_mode: SubstMode | str = SubstMode.STANDARD,
    type_constant_typing: bool = True,
) -> Program:
    """Base program followed by the clauses of each declaration, in order.

    Parameters
    ----------
    sig : Signature
        Well-formed signature.
    subst_mode : SubstMode or str, default ``"standard"``
        Passed to ``base_program``.
    type_constant_typing : bool, default True
        Also add ``type_α : TypeOf(α, L, Γ)`` for each type constant. Off
        gives the bare printed shape, which cannot type a type constant.

    Returns
    -------
    Program
        ``36 + 4·#terms + 5·#types`` clauses (``4·#types`` without typing).
    """
    extra: list[HornClause] = []
    for name, decl in sig.entries:
        if isinstance(decl, TermDecl):
            extra.extend(term_constant_clauses(name, decl.ty))
        else:
            extra.extend(type_constant_clauses(name, decl.kind, typing=type_constant_typing))
    program = base_program(subst_mode).extend(extra)
    log.debug("program for %d declarations has %d clauses", len(sig), len(program))
    return program
