"""Algorithmic equality over erased signatures.

Terms are compared type-directed: at arrow type by η-expansion, at base
type by weak head normalizing both sides and comparing structurally.
Types are compared by weak algorithmic equality. Running out of fuel
counts as "not equal".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from ..config import WHNF_FUEL
from ..errors import FuelExhausted
from .ops import SubstMode, erase, shift, whr_step
from .syntax import (
    App, Arrow, Const, PiT, SIMPLE_TYPE, Signature, SimpleKind,
    SimpleTy, Term, Ty, TyApp, TyConst, Var,
)


@dataclass(frozen=True)
class SimpleSignature:
    """Erased signature: constant name to simple type or simple kind."""

    terms: Mapping[str, SimpleTy]
    types: Mapping[str, SimpleKind]


def erase_signature(sig: Signature) -> SimpleSignature:
    return SimpleSignature(
        terms={name: erase(ty) for name, ty in sig.term_constants()},
        types={name: erase(kind) for name, kind in sig.type_constants()},
    )


def erase_context(entries: Sequence[Ty]) -> tuple[SimpleTy, ...]:
    return tuple(erase(ty) for ty in entries)


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted(0)


class _Equality:
    def __init__(self, ssig: SimpleSignature, fuel: int, mode: SubstMode):
        self.ssig = ssig
        self.fuel = _Fuel(fuel)
        self.mode = mode

    def whnf(self, m: Term) -> Term:
        while True:
            step = whr_step(m, self.mode)
            if step is None:
                return m
            self.fuel.spend()
            m = step

    def alg(self, delta: tuple[SimpleTy, ...], m: Term, n: Term, tau: SimpleTy) -> bool:
        if isinstance(tau, Arrow):
            return self.alg(
                delta + (tau.domain,),
                App(shift(m, 0), Var(0)),
                App(shift(n, 0), Var(0)),
                tau.codomain,
            )
        synthesized = self.struct(delta, self.whnf(m), self.whnf(n))
        return synthesized == tau

    def struct(self, delta: tuple[SimpleTy, ...], m: Term, n: Term) -> Optional[SimpleTy]:
        match m, n:
            case Var(i), Var(j):
                if i == j and i < len(delta):
                    return delta[-1 - i]
                return None
            case Const(c), Const(d):
                return self.ssig.terms.get(c) if c == d else None
            case App(m1, m2), App(n1, n2):
                head = self.struct(delta, m1, n1)
                if isinstance(head, Arrow) and self.alg(delta, m2, n2, head.domain):
                    return head.codomain
                return None
        return None

    def types(self, delta: tuple[SimpleTy, ...], a: Ty, b: Ty) -> Optional[SimpleKind]:
        match a, b:
            case TyConst(x), TyConst(y):
                return self.ssig.types.get(x) if x == y else None
            case TyApp(a1, m), TyApp(b1, n):
                head = self.types(delta, a1, b1)
                if isinstance(head, Arrow) and self.alg(delta, m, n, head.domain):
                    return head.codomain
                return None
            case PiT(a1, a2), PiT(b1, b2):
                if self.types(delta, a1, b1) != SIMPLE_TYPE:
                    return None
                # bodies are already scoped under the new binder
                if self.types(delta + (erase(a1),), a2, b2) != SIMPLE_TYPE:
                    return None
                return SIMPLE_TYPE
        return None


def _run(check, default):
    try:
        return check()
    except FuelExhausted:
        return default


def alg_eq_term(
    ssig: SimpleSignature,
    delta: Sequence[SimpleTy],
    m: Term,
    n: Term,
    tau: SimpleTy,
    fuel: int = WHNF_FUEL,
    mode: SubstMode | str = SubstMode.STANDARD,
) -> bool:
    """Decide ``Δ ⊢ M ⇔ N : τ``.

    Parameters
    ----------
    ssig : SimpleSignature
        Erased signature.
    delta : Sequence[SimpleTy]
        Erased context, outermost first.
    m, n : Term
        Compared terms.
    tau : SimpleTy
        Simple type at which they are compared.
    fuel : int, default ``WHNF_FUEL``
        Weak head reduction steps allowed overall.
    mode : SubstMode or str
        Substitution mode used by β steps.

    Returns
    -------
    bool
        True when the judgment is derivable within the fuel.
    """
    eq = _Equality(ssig, fuel, SubstMode(mode))
    return _run(lambda: eq.alg(tuple(delta), m, n, tau), False)


def struct_eq_term(
    ssig: SimpleSignature,
    delta: Sequence[SimpleTy],
    m: Term,
    n: Term,
    fuel: int = WHNF_FUEL,
    mode: SubstMode | str = SubstMode.STANDARD,
) -> Optional[SimpleTy]:
    """Synthesize ``τ`` with ``Δ ⊢ M ↔ N : τ``, or None."""
    eq = _Equality(ssig, fuel, SubstMode(mode))
    return _run(lambda: eq.struct(tuple(delta), m, n), None)


def weak_alg_eq_type(
    ssig: SimpleSignature,
    delta: Sequence[SimpleTy],
    a: Ty,
    b: Ty,
    kappa: SimpleKind,
    fuel: int = WHNF_FUEL,
    mode: SubstMode | str = SubstMode.STANDARD,
) -> bool:
    """Decide ``Δ ⊢ A ⇌ B : κ``."""
    eq = _Equality(ssig, fuel, SubstMode(mode))
    return _run(lambda: eq.types(tuple(delta), a, b) == kappa, False)


__all__ = [
    "SimpleSignature",
    "erase_signature",
    "erase_context",
    "alg_eq_term",
    "struct_eq_term",
    "weak_alg_eq_type",
]
