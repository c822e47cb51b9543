import pytest

from kicat.errors import TermSyntaxError, TypeMismatch, UnknownIdentifier
from kicat.parser import parse_program, parse_term, tokenize
from kicat.syntax import (
    Act, And, Comp, Cotuple, Dagger, Gen, Id, InjL, InjR, NegTest, Not, Or, Plus, Signature,
    Star, Test, WhileTest, Zero,
)


def test_def_and_precedence(sig):
    prog = parse_program("def p : 1 -> 1 = u ; u;\ndef q : 1 -> 1 = (t . u)* . ~t;\ncheck p == q;", sig)
    assert prog.defs["p"][1] == Comp(Act("u"), Act("u"))
    assert prog.defs["q"][1] == Comp(Star(Comp(Test("t"), Act("u"))), NegTest("t"))
    c, = prog.checks
    assert c.positive and c.lhs == prog.defs["p"][1] and c.rhs == prog.defs["q"][1]
    assert c.text == "p == q"


def test_precedence_plus_below_seq(sig):
    assert parse_term("u + v ; u*", sig) == Plus(Act("u"), Comp(Act("v"), Star(Act("u"))))
    assert parse_term("~t & t | t", sig) == Or(And(NegTest("t"), Test("t")), Test("t"))
    assert parse_term("~(t;t)", sig) == Not(Comp(Test("t"), Test("t")))


def test_dimension_inference(sig):
    assert parse_term("[inl, inr]", sig, expected=None) == Cotuple(InjL(1, 1), InjR(1, 1))
    assert parse_term("u;0", sig) == Comp(Act("u"), Zero(1, 1))
    assert parse_term("f;[id, 0]", sig) == Comp(Gen("f", 2), Cotuple(Id(1), Zero(1, 1)))
    assert parse_term("dagger(inl)", sig) == Dagger(InjL(1, 1))
    assert parse_term("id@2", sig) == Id(2)


def test_op_application(sig):
    assert parse_term("f(u, v)", sig) == Comp(Gen("f", 2), Cotuple(Act("u"), Act("v")))
    assert parse_term("a(u)", sig) == Comp(Gen("a", 1), Act("u"))
    with pytest.raises(TypeMismatch):
        parse_term("f(u)", sig)


def test_while_and_cotuple_nesting(sig):
    t = parse_term("while t do u od", sig)
    assert t == WhileTest(Test("t"), Act("u"))
    assert parse_term("[u, v, u]", sig) == Cotuple(Act("u"), Cotuple(Act("v"), Act("u")))


def test_errors_carry_locations(sig):
    with pytest.raises(UnknownIdentifier) as e:
        parse_term("u ; w", sig)
    assert (e.value.line, e.value.col) == (1, 5)
    with pytest.raises(TermSyntaxError) as e:
        parse_program("check u ==\n  ;", sig)
    assert e.value.line == 2
    with pytest.raises(TermSyntaxError):
        tokenize("u $ v")
    with pytest.raises(TypeMismatch):
        parse_term("u + inl", sig)


def test_program_signature_replaces_default():
    prog = parse_program("sig actions x; sig tests b; sig ops g:1;\ncheck x;g == x;g;", Signature())
    assert prog.sig == Signature(("x",), ("b",), (("g", 1),))
    assert prog.checks[0].lhs == Comp(Act("x"), Gen("g", 1))


def test_negative_check_and_comments(sig):
    prog = parse_program("# comment\ncheck id* != id; // trailing\n", sig)
    c, = prog.checks
    assert not c.positive
    assert c.line == 2


def test_redefinition_rejected(sig):
    with pytest.raises(TermSyntaxError):
        parse_program("def p : 1 -> 1 = u;\ndef p : 1 -> 1 = v;", sig)
    with pytest.raises(TermSyntaxError):
        parse_program("def u : 1 -> 1 = v;", sig)


def test_definition_type_checked(sig):
    with pytest.raises(TypeMismatch):
        parse_program("def p : 1 -> 2 = u;", sig)
