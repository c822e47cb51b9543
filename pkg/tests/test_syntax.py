import pytest
from hypothesis import given, settings, strategies as st

from kicat.errors import DuplicateName, NotATest, TypeMismatch, ZeroArity
from kicat.laws import TermGen, GENERAL, TAME, TEST
from kicat.parser import parse_term
from kicat.rattree import compile, is_test
from kicat.syntax import (
    Act, Comp, Cotuple, Gen, Id, IfTest, InjL, InjR, MorphType, NegTest, Plus, Signature,
    Star, TermClass, Test, WhileTest, Zero, classify, complement, desugar, load_signature,
    show, size, type_of,
)

from conftest import same

import random


def test_load_signature_text():
    s = load_signature("actions u; tests t; ops f:2")
    assert s == Signature(("u",), ("t",), (("f", 2),))
    assert s.arity == {"f": 2}
    assert s.natoms == 2


def test_signature_errors():
    with pytest.raises(ZeroArity):
        load_signature("ops f:0")
    with pytest.raises(DuplicateName):
        load_signature("actions u; tests u")
    with pytest.raises(DuplicateName):
        Signature(actions=("f",), ops=(("f", 1),))


def test_type_of_examples(sig):
    assert type_of(Gen("f", 2), sig) == MorphType(1, 2)
    assert type_of(Cotuple(Id(1), Zero(2, 1))) == MorphType(3, 1)
    assert type_of(InjR(2, 3)) == MorphType(3, 5)
    with pytest.raises(TypeMismatch):
        type_of(Star(InjL(1, 1)))
    with pytest.raises(TypeMismatch):
        type_of(Comp(Gen("f", 2), Act("u")), sig)
    with pytest.raises(TypeMismatch):
        type_of(Act("t"), sig)


def test_classify_examples():
    assert classify(Act("u")) == TermClass.TAME
    assert classify(Gen("f", 2)) == TermClass.GENERAL
    assert classify(Cotuple(InjL(1, 1), Zero(1, 2))) == TermClass.TEST
    assert classify(Star(Test("t"))) == TermClass.TAME
    assert classify(Plus(Test("t"), Comp(NegTest("t"), Id(1)))) == TermClass.TEST


def test_complement_examples():
    assert complement(Zero(2, 2)) == Id(2)
    assert complement(Id(1)) == Zero(1, 1)
    assert complement(Cotuple(InjL(1, 1), Zero(1, 2))) == Cotuple(Zero(1, 2), InjR(1, 1))
    assert complement(Cotuple(Zero(1, 2), InjR(1, 1))) == Cotuple(InjL(1, 1), Zero(1, 2))
    b, c = Test("t"), NegTest("t")
    assert complement(Plus(b, c)) == Comp(NegTest("t"), Test("t"))
    assert complement(Comp(b, c)) == Plus(NegTest("t"), Test("t"))
    with pytest.raises(NotATest):
        complement(Act("u"))


def test_desugar_examples():
    b, p, q = Test("t"), Act("u"), Act("v")
    assert desugar(IfTest(b, p, q)) == Plus(Comp(b, p), Comp(NegTest("t"), q))
    assert desugar(WhileTest(b, p)) == Comp(Star(Comp(b, p)), NegTest("t"))
    core = Plus(Star(p), Comp(b, q))
    assert desugar(core) == core


def terms(cls):
    return st.tuples(st.integers(0, 10**6), st.integers(1, 2), st.integers(1, 2),
                     st.integers(1, 12)).map(lambda a: _gen(cls, *a))


def _gen(cls, seed, n, k, size):
    g = TermGen(Signature.default(), random.Random(seed))
    if cls == TEST:
        k = n
    return g.term(cls, n, k, size)


@given(terms(GENERAL))
@settings(max_examples=200)
def test_printer_round_trip(t):
    sig = Signature.default()
    assert parse_term(show(t), sig) == t


@given(terms(GENERAL))
@settings(max_examples=100)
def test_desugar_preserves_type(t):
    assert type_of(desugar(t)) == type_of(t)


@given(terms(TAME))
@settings(max_examples=100)
def test_tame_generation_is_tame(t):
    assert classify(desugar(t)) != TermClass.GENERAL


@given(terms(TEST))
@settings(max_examples=100)
def test_generated_tests_are_tests(t):
    sig = Signature.default()
    assert classify(t) == TermClass.TEST
    p = compile(t, sig)
    assert is_test(p)
    n = type_of(t).dom
    c = complement(t)
    assert classify(c) == TermClass.TEST
    assert same(f"({show(t)}) ; ({show(c)})", f"0@({n},{n})", sig)
    assert same(f"({show(t)}) + ({show(c)})", f"id@{n}", sig)


def test_size_counts_nodes():
    assert size(Plus(Act("u"), Star(Act("v")))) == 4
