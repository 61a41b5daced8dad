"""Seeded generators for the oracle, fuzz and totality corpora.

All randomness goes through a ``numpy.random.Generator`` built from an
explicit seed, so every corpus is reproducible from the configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .config import CORPUS_SEED
from .errors import LFRefineError
from .kernel.checking import infer_type
from .kernel.syntax import (
    App, Const, Context, Lam, PiK, PiT, Signature, Term, TermDecl, Ty, TyApp,
    TyConst, TypeDecl, TYPE, Var,
)
from .metasyntax import (
    FreshSupply, MApp, MConst, MLam, MPiT, MTerm, MTyConst, Sort, embed, var,
)

BASE = TyConst("o")
BASE_TO_BASE = PiT(BASE, BASE)


def toy_signature() -> Signature:
    """Simply typed signature: ``o : type``, ``a b : o``, ``f : o → o``."""
    return Signature((
        ("o", TypeDecl(TYPE)),
        ("a", TermDecl(BASE)),
        ("b", TermDecl(BASE)),
        ("f", TermDecl(BASE_TO_BASE)),
    ))


NAT = TyConst("nat")
NAT_TO_NAT = PiT(NAT, NAT)


def arith_signature() -> Signature:
    """Second simply typed signature with a binary function constant."""
    return Signature((
        ("nat", TypeDecl(TYPE)),
        ("zero", TermDecl(NAT)),
        ("succ", TermDecl(NAT_TO_NAT)),
        ("plus", TermDecl(PiT(NAT, NAT_TO_NAT))),
    ))


BOOL = TyConst("bool")
ANSWER = TyConst("A")
TT, FF = Const("tt"), Const("ff")


def equal(left: Term, right: Term) -> Ty:
    """``left == right``."""
    return TyApp(TyApp(TyConst("=="), left), right)


def maybe(index: Term) -> Ty:
    return TyApp(TyConst("maybe_A"), index)


def dependent_signature() -> Signature:
    """Boolean equality and an option type indexed by whether it holds a value."""
    return Signature((
        ("A", TypeDecl(TYPE)),
        ("bool", TypeDecl(TYPE)),
        ("ff", TermDecl(BOOL)),
        ("tt", TermDecl(BOOL)),
        ("==", TypeDecl(PiK(BOOL, PiK(BOOL, TYPE)))),
        ("refl", TermDecl(PiT(BOOL, equal(Var(0), Var(0))))),
        ("elim_==", TermDecl(PiT(equal(TT, FF), ANSWER))),
        ("maybe_A", TypeDecl(PiK(BOOL, TYPE))),
        ("nothing", TermDecl(maybe(FF))),
        ("just", TermDecl(PiT(ANSWER, maybe(TT)))),
        ("elim_maybe_A", TermDecl(PiT(BOOL, PiT(
            maybe(Var(0)),
            PiT(
                PiT(equal(Var(1), FF), ANSWER),
                PiT(PiT(equal(Var(2), TT), PiT(ANSWER, ANSWER)), ANSWER),
            ),
        )))),
    ))


DEPENDENT_CTX = Context((ANSWER, maybe(TT)))


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(CORPUS_SEED if seed is None else seed)


def term_size(term: Term) -> int:
    match term:
        case Lam(annot, body):
            return 1 + _type_size(annot) + term_size(body)
        case App(fun, arg):
            return 1 + term_size(fun) + term_size(arg)
    return 1


def _type_size(ty: Ty) -> int:
    if isinstance(ty, PiT):
        return 1 + _type_size(ty.domain) + _type_size(ty.body)
    return 1


# ──────────────────────────────────────────────────────────────────────────────
# Exhaustive enumeration (oracle corpus)
# ──────────────────────────────────────────────────────────────────────────────

ANNOTATIONS = (BASE, BASE_TO_BASE)


def _terms_of_size(sig: Signature, depth: int, size: int) -> Iterator[Term]:
    if size == 1:
        for name, _ in sig.term_constants():
            yield Const(name)
        for index in range(depth):
            yield Var(index)
        return
    for annot in ANNOTATIONS:
        body_size = size - 1 - _type_size(annot)
        if body_size >= 1:
            for body in _terms_of_size(sig, depth + 1, body_size):
                yield Lam(annot, body)
    for fun_size in range(1, size - 1):
        for fun in _terms_of_size(sig, depth, fun_size):
            for arg in _terms_of_size(sig, depth, size - 1 - fun_size):
                yield App(fun, arg)


def candidate_terms(sig: Signature, ctx: Context, max_size: int) -> Iterator[Term]:
    """Every term up to ``max_size`` nodes, well-typed or not, smallest first.

    Candidates are built from the signature's term constants, the context's
    variables, and lambdas annotated with ``o`` or ``o → o``.
    """
    for size in range(1, max_size + 1):
        yield from _terms_of_size(sig, len(ctx), size)


def well_typed_terms(sig: Signature, ctx: Context, max_size: int) -> list[tuple[Term, Ty]]:
    """The kernel-well-typed ``candidate_terms``, each with its type."""
    found = []
    for term in candidate_terms(sig, ctx, max_size):
        try:
            found.append((term, infer_type(sig, ctx, term)))
        except LFRefineError:
            continue
    return found


# ──────────────────────────────────────────────────────────────────────────────
# Random well-typed terms with holes (fuzz corpus)
# ──────────────────────────────────────────────────────────────────────────────

def _random_typed(rng: np.random.Generator, sig: Signature, ctx: tuple[Ty, ...], ty: Ty, budget: int) -> Term:
    heads = [Const(n) for n, t in sig.term_constants() if t == ty]
    heads += [Var(len(ctx) - 1 - k) for k, t in enumerate(ctx) if t == ty]
    options = ["head"] if heads else []
    if budget > 2:
        if isinstance(ty, PiT):
            options.append("lam")
        options.append("app")
    if not options:
        options = ["lam"] if isinstance(ty, PiT) else ["app"]
    choice = options[rng.integers(len(options))]
    if choice == "head":
        return heads[rng.integers(len(heads))]
    if choice == "lam":
        body = _random_typed(rng, sig, ctx + (ty.domain,), ty.body, budget - 2)
        return Lam(ty.domain, body)
    functions = [(Const(n), t.domain) for n, t in sig.term_constants()
                 if isinstance(t, PiT) and t.body == ty]
    if not functions:
        return heads[0] if heads else Lam(ty.domain, _random_typed(rng, sig, ctx + (ty.domain,), ty.body, 1))
    fun, domain = functions[rng.integers(len(functions))]
    arg = _random_typed(rng, sig, ctx, domain, (budget - 1) // 2)
    return App(fun, arg)


@dataclass(frozen=True)
class FuzzCase:
    ctx: Context
    problem: MTerm
    witness: Term


def _positions(value, path=()) -> Iterator[tuple]:
    yield path
    match value:
        case MApp(fun, arg):
            yield from _positions(fun, path + ("fun",))
            yield from _positions(arg, path + ("arg",))
        case MLam(_, body):
            yield from _positions(body, path + ("body",))


def _replace(value, path, replacement):
    if not path:
        return replacement
    step, rest = path[0], path[1:]
    match value:
        case MApp(fun, arg):
            if step == "fun":
                return MApp(_replace(fun, rest, replacement), arg)
            return MApp(fun, _replace(arg, rest, replacement))
        case MLam(annot, body):
            if step == "annot":
                return MLam(replacement, body)
            return MLam(annot, _replace(body, rest, replacement))
    raise ValueError(f"no position {path} in {value!r}")


def punch_holes(rng: np.random.Generator, term: Term, max_holes: int, supply: FreshSupply) -> MTerm:
    """Replace up to ``max_holes`` random subterms (or annotations) by holes."""
    problem = embed(term)
    for _ in range(int(rng.integers(1, max_holes + 1))):
        positions = list(_positions(problem))
        annotations = [p + ("annot",) for p in positions
                       if isinstance(_at(problem, p), MLam) and not isinstance(_at(problem, p).annot, MPiT)]
        if annotations and rng.random() < 0.25:
            path = annotations[rng.integers(len(annotations))]
            problem = _replace(problem, path, supply.meta(Sort.TYPE))
            continue
        path = positions[rng.integers(len(positions))]
        problem = _replace(problem, path, supply.meta(Sort.TERM))
    return problem


def _at(value, path):
    for step in path:
        value = getattr(value, step)
    return value


def fuzz_cases(
    cases: int,
    max_size: int,
    max_holes: int,
    seed: Optional[int] = None,
    sig: Optional[Signature] = None,
    targets: tuple[Ty, ...] = ANNOTATIONS,
) -> list[FuzzCase]:
    """Well-typed terms of one of ``targets`` in context ``[targets[0]]``, with holes.

    Defaults to the toy signature with targets ``o`` and ``o → o``.
    """
    rng = make_rng(seed)
    sig = sig or toy_signature()
    ctx = Context((targets[0],))
    corpus = []
    for _ in range(cases):
        supply = FreshSupply()
        target = targets[rng.integers(len(targets))]
        witness = _random_typed(rng, sig, ctx.entries, target, max_size)
        corpus.append(FuzzCase(ctx, punch_holes(rng, witness, max_holes, supply), witness))
    return corpus


# ──────────────────────────────────────────────────────────────────────────────
# Random well-typed terms over the dependent signature
# ──────────────────────────────────────────────────────────────────────────────

def _variables(ctx: tuple[Ty, ...], ty: Ty) -> list[Term]:
    # every context type here is closed, so no shifting is needed
    return [Var(len(ctx) - 1 - k) for k, t in enumerate(ctx) if t == ty]


def _random_option(rng: np.random.Generator, ctx: tuple[Ty, ...], index: Term, budget: int) -> Term:
    options = _variables(ctx, maybe(index))
    if index == FF:
        options.append(Const("nothing"))
    elif budget > 2 or not options:
        options.append(App(Const("just"), _random_answer(rng, ctx, budget - 1)))
    return options[rng.integers(len(options))]


def _random_answer(rng: np.random.Generator, ctx: tuple[Ty, ...], budget: int) -> Term:
    """A term of type ``A``; ``ctx`` must hold a variable of type ``A``."""
    options: list[Optional[Term]] = _variables(ctx, ANSWER)
    options += [App(Const("elim_=="), v) for v in _variables(ctx, equal(TT, FF))]
    if budget > 6:
        options.append(None)
    choice = options[rng.integers(len(options))]
    if choice is not None:
        return choice
    index = (TT, FF)[rng.integers(2)]
    part = (budget - 4) // 3
    if_nothing = Lam(equal(index, FF), _random_answer(rng, ctx + (equal(index, FF),), part))
    inner = ctx + (equal(index, TT), ANSWER)
    if_just = Lam(equal(index, TT), Lam(ANSWER, _random_answer(rng, inner, part)))
    head = App(App(Const("elim_maybe_A"), index), _random_option(rng, ctx, index, part))
    return App(App(head, if_nothing), if_just)


def dependent_fuzz_cases(
    cases: int, max_size: int, max_holes: int, seed: Optional[int] = None
) -> list[FuzzCase]:
    """Well-typed terms of type ``A`` over ``dependent_signature`` with holes.

    The context is ``x : A, m : maybe_A tt``.
    """
    rng = make_rng(seed)
    corpus = []
    for _ in range(cases):
        supply = FreshSupply()
        witness = _random_answer(rng, DEPENDENT_CTX.entries, max_size)
        corpus.append(FuzzCase(DEPENDENT_CTX, punch_holes(rng, witness, max_holes, supply), witness))
    return corpus


# ──────────────────────────────────────────────────────────────────────────────
# Random extended terms, typed or not (totality corpus)
# ──────────────────────────────────────────────────────────────────────────────

def random_extended_term(
    rng: np.random.Generator, sig: Signature, size: int, depth: int = 0, supply: Optional[FreshSupply] = None
) -> MTerm:
    """Arbitrary extended term of at most ``size`` nodes over ``sig``.

    Variables stay within the ``depth`` binders in scope; nothing else about
    typing is respected.
    """
    supply = supply or FreshSupply()
    constants = [name for name, _ in sig.term_constants()]
    type_constants = [name for name, kind in sig.type_constants() if kind == TYPE]
    leaves = ["const", "hole"] + (["var"] if depth else [])
    kinds = leaves + (["lam", "app"] if size >= 3 else [])
    choice = kinds[rng.integers(len(kinds))]
    if choice == "const":
        return MConst(constants[rng.integers(len(constants))])
    if choice == "hole":
        return supply.meta(Sort.TERM)
    if choice == "var":
        return var(int(rng.integers(depth)))
    if choice == "lam":
        if rng.random() < 0.3:
            annot = supply.meta(Sort.TYPE)
        else:
            annot = MTyConst(type_constants[rng.integers(len(type_constants))])
        return MLam(annot, random_extended_term(rng, sig, size - 2, depth + 1, supply))
    left = int(rng.integers(1, size - 1))
    return MApp(
        random_extended_term(rng, sig, left, depth, supply),
        random_extended_term(rng, sig, size - 1 - left, depth, supply),
    )


def totality_corpus(cases: int, max_size: int, seed: Optional[int] = None) -> list[MTerm]:
    rng = make_rng(seed)
    sig = toy_signature()
    return [random_extended_term(rng, sig, int(rng.integers(1, max_size + 1))) for _ in range(cases)]
