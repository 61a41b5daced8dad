"""Pytest shared fixtures for lf-refine.

Signatures are built directly in kernel syntax so kernel and resolver
tests do not depend on the parser; the frontend tests check that the
``.slf`` fixtures elaborate to the same values.
"""
from __future__ import annotations

import pytest
import sys, pathlib

# Ensure project root is on sys.path even if tests run from inside tests/ directory
ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from lf_refine.corpus import arith_signature, dependent_signature, toy_signature
from lf_refine.kernel.syntax import (
    App, Const, Context, Lam, PiT, Signature, TyApp, TyConst, Var,
)
from lf_refine.metasyntax import FreshSupply, MApp, MConst, MLam, Sort, embed, var

FIXTURES = ROOT / "tests" / "fixtures"

BOOL = TyConst("bool")
A_TY = TyConst("A")
TT, FF = Const("tt"), Const("ff")


def eq(left, right):
    """``left == right`` in kernel syntax."""
    return TyApp(TyApp(TyConst("=="), left), right)


def maybe(index):
    return TyApp(TyConst("maybe_A"), index)


# Expected outcome of the fromJust problem
FROMJUST_TERM = App(
    App(App(Const("elim_maybe_A"), TT), Var(0)),
    Lam(eq(TT, FF), App(Const("elim_=="), Var(0))),
)
FROMJUST_TYPE = PiT(PiT(eq(TT, TT), PiT(A_TY, A_TY)), A_TY)


@pytest.fixture(scope="session")
def fromjust_sig() -> Signature:
    return dependent_signature()


@pytest.fixture(scope="session")
def fromjust_ctx() -> Context:
    return Context((maybe(TT),))


@pytest.fixture
def fromjust_problem():
    """``elim_maybe_A tt m (\\ (w : ?A) . ?b)`` with its hole ids."""
    supply = FreshSupply()
    hole_a = supply.meta(Sort.TYPE, "A")
    hole_b = supply.meta(Sort.TERM, "b")
    head = MApp(MApp(MConst("elim_maybe_A"), embed(TT)), var(0))
    return MApp(head, MLam(hole_a, hole_b)), hole_a.id, hole_b.id


@pytest.fixture(scope="session")
def toy_sig() -> Signature:
    return toy_signature()


@pytest.fixture(scope="session")
def arith_sig() -> Signature:
    return arith_signature()


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="function")
def tmp_results_dir(tmp_path):
    d = tmp_path / "results"
    d.mkdir()
    return d


@pytest.fixture(scope="session")
def fromjust_expected():
    """Refined fromJust term and its type."""
    return FROMJUST_TERM, FROMJUST_TYPE
