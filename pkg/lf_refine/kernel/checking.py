"""Well-formedness of kinds, types, terms, signatures and contexts.

This is the trusted checker every refinement result goes through. Failures
raise ``NotWellFormed`` carrying the path of the rejected subderivation;
the boolean ``check_*`` helpers wrap that for callers that only need a
verdict.
"""

from __future__ import annotations

from ..errors import NotWellFormed, SignatureIllFormed
from .equality import erase_context, erase_signature, weak_alg_eq_type
from .ops import SubstMode, subst
from .syntax import (
    App, Const, Context, Kind, Lam, PiK, PiT, SIMPLE_TYPE, Signature, Term,
    TermDecl, Ty, TyApp, TyConst, TypeDecl, TypeK, Var,
)

Path = tuple[str, ...]


class _Checker:
    def __init__(self, sig: Signature, mode: SubstMode):
        self.sig = sig
        self.ssig = erase_signature(sig)
        self.mode = mode

    def types_agree(self, ctx: Context, expected: Ty, actual: Ty) -> bool:
        return weak_alg_eq_type(
            self.ssig, erase_context(ctx.entries), expected, actual, SIMPLE_TYPE, mode=self.mode
        )

    def check_kind(self, ctx: Context, kind: Kind, path: Path) -> None:
        match kind:
            case TypeK():
                return
            case PiK(domain, body):
                self.expect_type(ctx, domain, path + ("pik.domain",))
                self.check_kind(ctx.extend(domain), body, path + ("pik.body",))
                return
        raise NotWellFormed(f"not a kind: {kind!r}", path)

    def expect_type(self, ctx: Context, ty: Ty, path: Path) -> None:
        if self.infer_kind(ctx, ty, path) != TypeK():
            raise NotWellFormed("expected a type of kind type", path)

    def infer_kind(self, ctx: Context, ty: Ty, path: Path) -> Kind:
        match ty:
            case TyConst(name):
                kind = self.sig.lookup_type(name)
                if kind is None:
                    raise NotWellFormed(f"undeclared type constant {name!r}", path)
                return kind
            case PiT(domain, body):
                self.expect_type(ctx, domain, path + ("pi.domain",))
                self.expect_type(ctx.extend(domain), body, path + ("pi.body",))
                return TypeK()
            case TyApp(head, arg):
                head_kind = self.infer_kind(ctx, head, path + ("tyapp.head",))
                if not isinstance(head_kind, PiK):
                    raise NotWellFormed("type family applied to too many arguments", path)
                arg_ty = self.infer_type(ctx, arg, path + ("tyapp.arg",))
                if not self.types_agree(ctx, head_kind.domain, arg_ty):
                    raise NotWellFormed("argument type does not match the family's domain", path + ("tyapp.arg",))
                return subst(head_kind.body, arg, 0, self.mode)
        raise NotWellFormed(f"not a type: {ty!r}", path)

    def infer_type(self, ctx: Context, term: Term, path: Path) -> Ty:
        match term:
            case Const(name):
                ty = self.sig.lookup_term(name)
                if ty is None:
                    raise NotWellFormed(f"undeclared term constant {name!r}", path)
                return ty
            case Var(index):
                ty = ctx.lookup(index)
                if ty is None:
                    raise NotWellFormed(f"index {index} is not bound in a context of length {len(ctx)}", path)
                return ty
            case Lam(annot, body):
                self.expect_type(ctx, annot, path + ("lam.annot",))
                return PiT(annot, self.infer_type(ctx.extend(annot), body, path + ("lam.body",)))
            case App(fun, arg):
                fun_ty = self.infer_type(ctx, fun, path + ("app.fun",))
                if not isinstance(fun_ty, PiT):
                    raise NotWellFormed("applying a term whose type is not a Π type", path + ("app.fun",))
                arg_ty = self.infer_type(ctx, arg, path + ("app.arg",))
                if not self.types_agree(ctx, fun_ty.domain, arg_ty):
                    raise NotWellFormed("argument type does not match the function's domain", path + ("app.arg",))
                return subst(fun_ty.body, arg, 0, self.mode)
        raise NotWellFormed(f"not a term: {term!r}", path)

    def check_context(self, ctx: Context) -> None:
        prefix = Context()
        for position, entry in enumerate(ctx.entries):
            self.expect_type(prefix, entry, (f"ctx[{position}]",))
            prefix = prefix.extend(entry)


def check_kind(sig: Signature, ctx: Context, kind: Kind, mode: SubstMode | str = SubstMode.STANDARD) -> bool:
    """True when ``Σ; Γ ⊢ L : kind``."""
    try:
        _Checker(sig, SubstMode(mode)).check_kind(ctx, kind, ())
    except NotWellFormed:
        return False
    return True


def infer_kind(sig: Signature, ctx: Context, ty: Ty, mode: SubstMode | str = SubstMode.STANDARD) -> Kind:
    """Kind ``L`` with ``Σ; Γ ⊢ A : L``.

    Raises
    ------
    NotWellFormed
        With the location of the failing subderivation.
    """
    return _Checker(sig, SubstMode(mode)).infer_kind(ctx, ty, ())


def infer_type(sig: Signature, ctx: Context, term: Term, mode: SubstMode | str = SubstMode.STANDARD) -> Ty:
    """Type ``A`` with ``Σ; Γ ⊢ M : A``.

    Parameters
    ----------
    sig : Signature
        Well-formed signature.
    ctx : Context
        Well-formed context.
    term : Term
        Term to type.
    mode : SubstMode or str, default ``"standard"``
        Substitution used for Π elimination and β steps.

    Returns
    -------
    Ty
        The synthesized type.

    Raises
    ------
    NotWellFormed
        With the location of the failing subderivation.
    """
    return _Checker(sig, SubstMode(mode)).infer_type(ctx, term, ())


def validate_signature(sig: Signature, mode: SubstMode | str = SubstMode.STANDARD) -> None:
    """Check every declaration against the signature prefix before it.

    Raises
    ------
    SignatureIllFormed
        For the first declaration that fails.
    """
    mode = SubstMode(mode)
    for position, (name, decl) in enumerate(sig.entries):
        checker = _Checker(sig.prefix(position), mode)
        try:
            match decl:
                case TermDecl(ty):
                    checker.expect_type(Context(), ty, (name,))
                case TypeDecl(kind):
                    checker.check_kind(Context(), kind, (name,))
        except NotWellFormed as exc:
            raise SignatureIllFormed(position, name, str(exc)) from exc


def check_signature(sig: Signature, mode: SubstMode | str = SubstMode.STANDARD) -> bool:
    try:
        validate_signature(sig, mode)
    except SignatureIllFormed:
        return False
    return True


def validate_context(sig: Signature, ctx: Context, mode: SubstMode | str = SubstMode.STANDARD) -> None:
    """Raise ``NotWellFormed`` unless each entry has kind type over its prefix."""
    _Checker(sig, SubstMode(mode)).check_context(ctx)


def check_context(sig: Signature, ctx: Context, mode: SubstMode | str = SubstMode.STANDARD) -> bool:
    try:
        validate_context(sig, ctx, mode)
    except NotWellFormed:
        return False
    return True


def same_type(sig: Signature, ctx: Context, a: Ty, b: Ty, mode: SubstMode | str = SubstMode.STANDARD) -> bool:
    """Weak algorithmic equality of two types at kind type in ``ctx``."""
    return _Checker(sig, SubstMode(mode)).types_agree(ctx, a, b)


def same_kind(sig: Signature, ctx: Context, a: Kind, b: Kind, mode: SubstMode | str = SubstMode.STANDARD) -> bool:
    """Kinds agree when their Π domains agree pointwise as types."""
    checker = _Checker(sig, SubstMode(mode))
    while isinstance(a, PiK) and isinstance(b, PiK):
        if not checker.types_agree(ctx, a.domain, b.domain):
            return False
        ctx = ctx.extend(a.domain)
        a, b = a.body, b.body
    return isinstance(a, TypeK) and isinstance(b, TypeK)


def check_ground_problem(
    sig: Signature, ctx: Context, term: Term, mode: SubstMode | str = SubstMode.STANDARD
) -> Ty:
    """Kernel-check a whole problem: signature, then context, then term.

    Returns the term's type. Raises ``SignatureIllFormed`` or
    ``NotWellFormed``.
    """
    validate_signature(sig, mode)
    validate_context(sig, ctx, mode)
    return infer_type(sig, ctx, term, mode)
