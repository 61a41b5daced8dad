"""Trusted nameless LF kernel."""

from .checking import (
    check_context, check_ground_problem, check_kind, check_signature,
    infer_kind, infer_type, same_kind, same_type, validate_context, validate_signature,
)
from .equality import (
    SimpleSignature, alg_eq_term, erase_context, erase_signature,
    struct_eq_term, weak_alg_eq_type,
)
from .ops import SubstMode, erase, lift, shift, subst, whnf, whr_step
from .syntax import (
    App, Arrow, Base, Const, Context, Decl, EMPTY_CONTEXT, EMPTY_SIGNATURE,
    Kind, Lam, PiK, PiT, SIMPLE_TYPE, Signature, SimpleKind, SimpleTy,
    SimpleTypeK, TYPE, Term, TermDecl, Ty, TyApp, TyConst, TypeDecl, TypeK,
    Var, app_spine, tyapp_spine,
)

__all__ = [
    "App", "Arrow", "Base", "Const", "Context", "Decl", "EMPTY_CONTEXT",
    "EMPTY_SIGNATURE", "Kind", "Lam", "PiK", "PiT", "SIMPLE_TYPE",
    "Signature", "SimpleKind", "SimpleTy", "SimpleTypeK", "TYPE", "Term",
    "TermDecl", "Ty", "TyApp", "TyConst", "TypeDecl", "TypeK", "Var",
    "app_spine", "tyapp_spine",
    "SubstMode", "erase", "lift", "shift", "subst", "whnf", "whr_step",
    "SimpleSignature", "alg_eq_term", "erase_context", "erase_signature",
    "struct_eq_term", "weak_alg_eq_type",
    "check_context", "check_ground_problem", "check_kind", "check_signature",
    "infer_kind", "infer_type", "same_kind", "same_type", "validate_context",
    "validate_signature",
]
