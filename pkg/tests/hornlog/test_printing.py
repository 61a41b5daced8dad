"""Tests for the Prolog-style text of values, atoms and programs."""
import pytest

from lf_refine.hornlog import (
    EqType, HornClause, Program, ProofTerm, TOP, TermOf, Whr, format_atom,
    format_value, quote_name, subject_of,
)
from lf_refine.metasyntax import (
    Cons, FreshSupply, MApp, MConst, MLam, MPiT, MTYPE, MTyApp, MTyConst, NIL, Sort, var,
)


def test_quote_name():
    assert quote_name("maybe_A") == "maybe_A"
    assert quote_name("tt") == "tt"
    assert quote_name("A") == "'A'"
    assert quote_name("==") == "'=='"
    assert quote_name("elim_==") == "'elim_=='"
    assert quote_name("it's") == "'it\\'s'"


def test_format_value_functors():
    value = MLam(MTyApp(MTyConst("maybe_A"), MConst("tt")), MApp(MConst("just"), var(1)))
    assert format_value(value) == "lam(tyapp(tyconst(maybe_A), const(tt)), app(const(just), s(z)))"
    assert format_value(Cons(MPiT(MTyConst("A"), MTyConst("A")), NIL)) == (
        "cons(pi(tyconst('A'), tyconst('A')), nil)"
    )
    assert format_value(MTYPE) == "typek"


def test_format_atom_with_meta_names():
    supply = FreshSupply()
    a = supply.meta(Sort.TYPE)
    g = supply.meta(Sort.CONTEXT)
    names = {a.id: "A0", g.id: "G0"}
    atom = TermOf(MConst("tt"), a, g)
    assert format_atom(atom, names.get) == "term(const(tt), A0, G0)"
    assert format_atom(TOP) == "top"


def test_subject_of():
    supply = FreshSupply()
    m = supply.meta(Sort.TERM)
    assert subject_of(TermOf(m, MTyConst("o"), NIL)) == m
    assert subject_of(EqType(MTyConst("o"), MTyConst("o"), MTYPE, NIL)) == MTyConst("o")
    assert subject_of(TOP) is None


def test_program_indexes_by_first_functor():
    supply = FreshSupply()
    a, g = supply.meta(Sort.TYPE), supply.meta(Sort.CONTEXT)
    m = supply.meta(Sort.TERM)
    const_clause = HornClause("c", TermOf(MConst("c"), a, g))
    app_clause = HornClause("app", TermOf(MApp(m, m), a, g), (TOP,))
    whr_clause = HornClause("whr", Whr(m, m))
    program = Program((const_clause, app_clause, whr_clause))
    atom = TermOf(m, a, g)
    assert list(program.candidates(atom, MConst("c"))) == [const_clause]
    assert list(program.candidates(atom, MApp(MConst("c"), MConst("c")))) == [app_clause]
    assert list(program.candidates(atom)) == [const_clause, app_clause]
    assert program.names() == ["c", "app", "whr"]
    assert "whr" in program and program.clause("app") is app_clause


def test_program_rejects_duplicate_names():
    clause = HornClause("k", TOP)
    with pytest.raises(ValueError):
        Program((clause, clause))


def test_proof_term_text_and_size():
    proof = ProofTerm("app", (ProofTerm("c"), ProofTerm("shift", computed=True)))
    assert str(proof) == "app(c, shift)"
    assert proof.size() == 3
