"""Shifting, substitution, erasure and weak head reduction.

Substitution comes in two modes. ``standard`` is capture-avoiding
de Bruijn substitution: indices above the target drop by one and binders
are treated alike. ``verbatim`` follows the printed equations literally:
no decrement, and a Π body is shifted before substituting into it.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional, Union

from ..config import WHNF_FUEL
from ..errors import FuelExhausted
from .syntax import (
    App, Arrow, Base, Const, Kind, Lam, PiK, PiT, SIMPLE_TYPE, SimpleKind,
    SimpleTy, Term, Ty, TyApp, TyConst, TypeK, Var,
)

Subject = Union[Term, Ty, Kind]


class SubstMode(str, Enum):
    STANDARD = "standard"
    VERBATIM = "verbatim"


def lift(subject: Subject, amount: int, cutoff: int = 0) -> Subject:
    """Add ``amount`` to every index ``>= cutoff``."""
    if amount == 0:
        return subject
    match subject:
        case Var(index):
            return Var(index + amount) if index >= cutoff else subject
        case Const() | TyConst() | TypeK():
            return subject
        case App(fun, arg):
            return App(lift(fun, amount, cutoff), lift(arg, amount, cutoff))
        case Lam(annot, body):
            return Lam(lift(annot, amount, cutoff), lift(body, amount, cutoff + 1))
        case TyApp(head, arg):
            return TyApp(lift(head, amount, cutoff), lift(arg, amount, cutoff))
        case PiT(domain, body):
            return PiT(lift(domain, amount, cutoff), lift(body, amount, cutoff + 1))
        case PiK(domain, body):
            return PiK(lift(domain, amount, cutoff), lift(body, amount, cutoff + 1))
    raise TypeError(f"not a kernel kind, type or term: {subject!r}")


def shift(subject: Subject, cutoff: int = 0) -> Subject:
    """Increment every index ``>= cutoff`` by one.

    Parameters
    ----------
    subject : Term | Ty | Kind
        Value to shift.
    cutoff : int, default 0
        Indices below the cutoff are bound locally and stay unchanged.

    Returns
    -------
    Term | Ty | Kind
        Shifted value of the same sort.
    """
    return lift(subject, 1, cutoff)


def _verbatim_index(index: int, target: int, replacement: Term) -> Term:
    # 0[N/0] = N, 0[N/σι] = 0, σι[N/0] = σι, σι[N/σι'] = σ(ι[N/ι'])
    common = min(index, target)
    index, target = index - common, target - common
    if index == 0 and target == 0:
        base = replacement
    else:
        base = Var(index)
    return lift(base, common, 0)


def _subst(subject: Subject, replacement: Term, target: int, lifted: int, mode: SubstMode) -> Subject:
    match subject:
        case Var(index):
            if mode is SubstMode.VERBATIM:
                return _verbatim_index(index, target, lift(replacement, lifted, 0))
            if index == target:
                return lift(replacement, lifted, 0)
            return Var(index - 1) if index > target else subject
        case Const() | TyConst() | TypeK():
            return subject
        case App(fun, arg):
            return App(
                _subst(fun, replacement, target, lifted, mode),
                _subst(arg, replacement, target, lifted, mode),
            )
        case TyApp(head, arg):
            return TyApp(
                _subst(head, replacement, target, lifted, mode),
                _subst(arg, replacement, target, lifted, mode),
            )
        case Lam(annot, body):
            return Lam(
                _subst(annot, replacement, target, lifted, mode),
                _subst(body, replacement, target + 1, lifted + 1, mode),
            )
        case PiT(domain, body) | PiK(domain, body):
            node = type(subject)
            new_domain = _subst(domain, replacement, target, lifted, mode)
            if mode is SubstMode.VERBATIM:
                return node(new_domain, _subst(shift(body, 0), replacement, target + 1, lifted, mode))
            return node(new_domain, _subst(body, replacement, target + 1, lifted + 1, mode))
    raise TypeError(f"not a kernel kind, type or term: {subject!r}")


def subst(
    subject: Subject,
    replacement: Term,
    target: int = 0,
    mode: SubstMode | str = SubstMode.STANDARD,
) -> Subject:
    """Replace ``Var(target)`` by ``replacement`` in ``subject``.

    Parameters
    ----------
    subject : Term | Ty | Kind
        Value substituted into.
    replacement : Term
        Term put at every occurrence of the target index.
    target : int, default 0
        Index being replaced.
    mode : SubstMode or str, default ``"standard"``
        ``standard`` or ``verbatim`` (see module docstring).

    Returns
    -------
    Term | Ty | Kind
        Value of the same sort.
    """
    return _subst(subject, replacement, target, 0, SubstMode(mode))


def erase(subject: Union[Ty, Kind]) -> Union[SimpleTy, SimpleKind]:
    """Drop term dependencies: ``(A M)⁻ = A⁻`` and Π becomes an arrow."""
    match subject:
        case TyConst(name):
            return Base(name)
        case TyApp(head, _):
            return erase(head)
        case PiT(domain, body) | PiK(domain, body):
            return Arrow(erase(domain), erase(body))
        case TypeK():
            return SIMPLE_TYPE
    raise TypeError(f"not a kernel kind or type: {subject!r}")


def whr_step(subject: Term, mode: SubstMode | str = SubstMode.STANDARD) -> Optional[Term]:
    """One weak-head reduction step, or None when the head is not a redex."""
    if not isinstance(subject, App):
        return None
    fun = subject.fun
    if isinstance(fun, Lam):
        return subst(fun.body, subject.arg, 0, mode)
    reduced = whr_step(fun, mode)
    return None if reduced is None else App(reduced, subject.arg)


def whnf(subject: Term, fuel: int = WHNF_FUEL, mode: SubstMode | str = SubstMode.STANDARD) -> Term:
    """Iterate ``whr_step`` to a weak head normal form.

    Raises
    ------
    FuelExhausted
        When ``fuel`` steps did not reach a normal form.
    """
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    current = subject
    for _ in range(fuel):
        step = whr_step(current, mode)
        if step is None:
            return current
        current = step
    if whr_step(current, mode) is None:
        return current
    raise FuelExhausted(fuel)
