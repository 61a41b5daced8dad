"""Partial evaluation of the shift, subst and whr relations.

The clauses for these relations only recompute what the kernel already
defines. The resolver may instead evaluate such an atom directly on the
current bindings, as long as the input side is known: the result is then
unified with the output argument and the step is recorded as a single
proof leaf naming the clause for the input's top constructor.

An input that still contains an unbound metavariable where evaluation
needs to look raises ``Stuck``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hornlog.atoms import Atom, ProofTerm, ShiftEq, SubstEq, Whr
from .hornlog.unify import Subst, apply_subst
from .kernel import ops as kernel_ops
from .kernel.ops import SubstMode
from .metasyntax import (
    MApp, MConst, MetaId, Meta, MLam, MPiK, MPiT, MTyApp, MTyConst, MTypeK,
    MVar, embed, index_of, index_value, is_ground, to_kernel,
)


class Stuck(Exception):
    """Evaluation reached an unbound metavariable."""

    def __init__(self, meta_id: MetaId):
        super().__init__(f"evaluation blocked on {meta_id}")
        self.meta_id = meta_id


@dataclass(frozen=True)
class Computed:
    """Output value of an evaluated atom and the proof leaf recording it."""

    value: object
    proof: ProofTerm


def _resolve(theta: Subst, value):
    value = theta.walk(value)
    if isinstance(value, Meta):
        raise Stuck(value.id)
    return value


def _number(theta: Subst, index) -> int:
    """Numeric value of an index, walking bindings at each successor."""
    count = 0
    index = _resolve(theta, index)
    while index_value(index) is None:
        # a Succ whose predecessor is (or leads to) a bound metavariable
        count += 1
        index = _resolve(theta, index.pred)
    return count + index_value(index)


def _lift(theta: Subst, subject, amount: int, cutoff: int):
    if amount == 0:
        return subject
    subject = _resolve(theta, subject)
    match subject:
        case MVar(index):
            n = _number(theta, index)
            return MVar(index_of(n + amount)) if n >= cutoff else MVar(index_of(n))
        case MConst() | MTyConst() | MTypeK():
            return subject
        case MApp(fun, arg):
            return MApp(_lift(theta, fun, amount, cutoff), _lift(theta, arg, amount, cutoff))
        case MTyApp(head, arg):
            return MTyApp(_lift(theta, head, amount, cutoff), _lift(theta, arg, amount, cutoff))
        case MLam(annot, body):
            return MLam(_lift(theta, annot, amount, cutoff), _lift(theta, body, amount, cutoff + 1))
        case MPiT(domain, body) | MPiK(domain, body):
            return type(subject)(
                _lift(theta, domain, amount, cutoff), _lift(theta, body, amount, cutoff + 1)
            )
    raise TypeError(f"cannot shift {subject!r}")


def _verbatim_index(theta: Subst, index: int, target: int, replacement):
    common = min(index, target)
    index, target = index - common, target - common
    base = replacement if index == 0 and target == 0 else MVar(index_of(index))
    return _lift(theta, base, common, 0)


def _subst(theta: Subst, subject, replacement, target: int, lifted: int, mode: SubstMode):
    subject = _resolve(theta, subject)
    match subject:
        case MVar(index):
            n = _number(theta, index)
            if mode is SubstMode.VERBATIM:
                return _verbatim_index(theta, n, target, _lift(theta, replacement, lifted, 0))
            if n == target:
                return _lift(theta, replacement, lifted, 0)
            return MVar(index_of(n - 1 if n > target else n))
        case MConst() | MTyConst() | MTypeK():
            return subject
        case MApp(fun, arg):
            return MApp(
                _subst(theta, fun, replacement, target, lifted, mode),
                _subst(theta, arg, replacement, target, lifted, mode),
            )
        case MTyApp(head, arg):
            return MTyApp(
                _subst(theta, head, replacement, target, lifted, mode),
                _subst(theta, arg, replacement, target, lifted, mode),
            )
        case MLam(annot, body):
            return MLam(
                _subst(theta, annot, replacement, target, lifted, mode),
                _subst(theta, body, replacement, target + 1, lifted + 1, mode),
            )
        case MPiT(domain, body) | MPiK(domain, body):
            node = type(subject)
            new_domain = _subst(theta, domain, replacement, target, lifted, mode)
            if mode is SubstMode.VERBATIM:
                shifted = _lift(theta, body, 1, 0)
                return node(new_domain, _subst(theta, shifted, replacement, target + 1, lifted, mode))
            return node(new_domain, _subst(theta, body, replacement, target + 1, lifted + 1, mode))
    raise TypeError(f"cannot substitute into {subject!r}")


def _whr(theta: Subst, subject, mode: SubstMode):
    """One reduction step; None when the head is rigid and not a redex."""
    subject = _resolve(theta, subject)
    if not isinstance(subject, MApp):
        return None
    fun = _resolve(theta, subject.fun)
    if isinstance(fun, MLam):
        return _subst(theta, fun.body, subject.arg, 0, 0, mode)
    reduced = _whr(theta, fun, mode)
    return None if reduced is None else MApp(reduced, subject.arg)


def _shift_head(theta: Subst, subject, cutoff: int) -> str:
    match subject:
        case MConst(name) | MTyConst(name):
            return f"shift_{name}"
        case MVar(index):
            if cutoff == 0:
                return "shifttgt"
            return "shifttpred" if _number(theta, index) == 0 else "shifttstep"
        case MLam():
            return "shifttintro"
        case MApp() | MTyApp():
            return "shifttelim"
    return "shiftTtintro"


def _subst_head(theta: Subst, subject, target: int) -> str:
    match subject:
        case MConst(name) | MTyConst(name):
            return f"subst_{name}"
        case MVar(index):
            n = _number(theta, index)
            if n == 0:
                return "substz" if target == 0 else "substs"
            return "substgt" if target == 0 else "substpred"
        case MLam():
            return "substintro"
        case MApp() | MTyApp():
            return "substtelim"
    return "substTtintro"


def _evaluate_ground(atom: Atom, theta: Subst, mode: SubstMode):
    """Kernel result when every input of ``atom`` is ground, else None."""
    inputs = tuple(apply_subst(theta, x) for x in _inputs(atom))
    if not is_ground(inputs):
        return None
    match atom:
        case ShiftEq():
            subject, cutoff = inputs
            return embed(kernel_ops.shift(to_kernel(subject), index_value(cutoff)))
        case SubstEq():
            subject, arg, at = inputs
            return embed(kernel_ops.subst(to_kernel(subject), to_kernel(arg), index_value(at), mode))
        case Whr():
            reduced = kernel_ops.whr_step(to_kernel(inputs[0]), mode)
            return None if reduced is None else embed(reduced)
    return None


def _inputs(atom: Atom) -> tuple:
    match atom:
        case ShiftEq(subject, cutoff, _):
            return (subject, cutoff)
        case SubstEq(subject, arg, at, _):
            return (subject, arg, at)
        case Whr(source, _):
            return (source,)
    raise TypeError(f"not a computed atom: {atom!r}")


def blocking_input(atom: Atom, theta: Subst) -> Optional[MetaId]:
    """The unbound metavariable an atom's input is, if it is one."""
    if isinstance(atom, Whr):
        source = atom.source
    else:
        source = atom.subject
    source = theta.walk(source)
    return source.id if isinstance(source, Meta) else None


def evaluate(atom: Atom, theta: Subst, mode: SubstMode | str = SubstMode.STANDARD) -> Optional[Computed]:
    """Evaluate a shift, subst or whr atom under ``theta``.

    Parameters
    ----------
    atom : ShiftEq | SubstEq | Whr
        Atom to evaluate; its last argument is the output.
    theta : Subst
        Current bindings.
    mode : SubstMode or str, default ``"standard"``
        Substitution reading, as in ``lf_refine.kernel.ops``.

    Returns
    -------
    Computed or None
        None when the relation has no solution (a whr on a rigid head).

    Raises
    ------
    Stuck
        When an unbound metavariable blocks evaluation.
    """
    mode = SubstMode(mode)
    kernel_value = _evaluate_ground(atom, theta, mode)
    match atom:
        case ShiftEq(subject, cutoff, _):
            n = _number(theta, cutoff)
            value = _lift(theta, subject, 1, n) if kernel_value is None else kernel_value
            head = _shift_head(theta, _resolve(theta, subject), n)
        case SubstEq(subject, arg, at, _):
            n = _number(theta, at)
            value = _subst(theta, subject, arg, n, 0, mode) if kernel_value is None else kernel_value
            head = _subst_head(theta, _resolve(theta, subject), n)
        case Whr(source, _):
            value = _whr(theta, source, mode) if kernel_value is None else kernel_value
            if value is None:
                return None
            fun = _resolve(theta, _resolve(theta, source).fun)
            head = "whrs" if isinstance(fun, MLam) else "whrh"
        case _:
            raise TypeError(f"not a computed atom: {atom!r}")
    return Computed(value, ProofTerm(head, computed=True))


def output_of(atom: Atom):
    if isinstance(atom, Whr):
        return atom.target
    return atom.result
