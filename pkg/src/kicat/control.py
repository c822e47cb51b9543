"""Decisions, tests, conditionals, loops and the dagger, as term builders.

All builders return core terms.  A decision on ``n`` is a term of type
``n -> n+n``; the right summand means "true".
"""
from __future__ import annotations

from .errors import NotATest, TypeMismatch
from .syntax import (
    Comp, Cotuple, Dagger, Id, InjL, InjR, Plus, Star, Term, WhileTest, Zero,
    complement, is_test_form, type_of,
)


def _dom(t):
    return type_of(t).dom


def _decision_dom(d):
    ty = type_of(d)
    if ty.cod != 2 * ty.dom:
        raise TypeMismatch(f"decision must have type n -> n+n, got {ty}")
    return ty.dom


def _check_test(b):
    if not is_test_form(b):
        raise NotATest(f"{b} is not in test form")


def oplus(p: Term, q: Term) -> Term:
    """Coproduct of morphisms: [p;inl, q;inr]."""
    tp, tq = type_of(p), type_of(q)
    return Cotuple(Comp(p, InjL(tp.cod, tq.cod)), Comp(q, InjR(tp.cod, tq.cod)))


def swap(n: int, m: int) -> Term:
    """The symmetry n+m -> m+n."""
    return Cotuple(InjR(m, n), InjL(m, n))


def codiag(n: int) -> Term:
    return Cotuple(Id(n), Id(n))


# -- decisions -------------------------------------------------------------------

def dtrue(n: int = 1) -> Term:
    return InjR(n, n)


def dfalse(n: int = 1) -> Term:
    return InjL(n, n)


def dneg(d: Term) -> Term:
    n = _decision_dom(d)
    return Comp(d, Cotuple(InjR(n, n), InjL(n, n)))


def dor(d: Term, e: Term) -> Term:
    n = _decision_dom(d)
    return Comp(d, Cotuple(e, InjR(n, n)))


def dand(d: Term, e: Term) -> Term:
    n = _decision_dom(d)
    return Comp(d, Cotuple(InjL(n, n), e))


def dec_build(kind: str, *args, n: int = 1) -> Term:
    if kind == "dtrue":
        return dtrue(n)
    if kind == "dfalse":
        return dfalse(n)
    if kind == "dneg":
        return dneg(*args)
    if kind == "dor":
        return dor(*args)
    if kind == "dand":
        return dand(*args)
    raise ValueError(f"unknown decision connective {kind!r}")


def test_to_dec(b: Term) -> Term:
    _check_test(b)
    n = _dom(b)
    return Plus(Comp(complement(b), InjL(n, n)), Comp(b, InjR(n, n)))


def dec_to_test(d: Term) -> Term:
    n = _decision_dom(d)
    return Comp(d, Cotuple(Zero(n, n), Id(n)))


# -- conditionals and loops --------------------------------------------------------

def ite_test(b: Term, p: Term, q: Term) -> Term:
    _check_test(b)
    return Plus(Comp(b, p), Comp(complement(b), q))


def ite_dec(d: Term, p: Term, q: Term) -> Term:
    return Comp(d, Cotuple(q, p))


def while_test(b: Term, p: Term) -> Term:
    _check_test(b)
    return Comp(Star(Comp(b, p)), complement(b))


def dagger(p: Term) -> Term:
    """Iterate p : n -> k+n until it leaves through the k summand."""
    ty = type_of(p)
    n, k = ty.dom, ty.cod - ty.dom
    if k < 1:
        raise TypeMismatch(f"dagger needs n -> k+n, got {ty}")
    loop = Star(Cotuple(Zero(k, k + n), p))
    return Comp(Comp(p, loop), Cotuple(Id(k), Zero(n, k)))


def while_dec(d: Term, p: Term) -> Term:
    n = _decision_dom(d)
    return dagger(Comp(d, Cotuple(InjL(n, n), Comp(p, InjR(n, n)))))


def delta(n: int, k: int) -> Term:
    """inr-dagger : n -> k."""
    return dagger(InjR(k, n))


# -- translations ------------------------------------------------------------------

DIRECTIONS = (
    "star->dagger", "dagger->star", "dagger->while",
    "while->dagger", "while->star", "star->while",
)


def star_as_dagger(p: Term) -> Term:
    n = _dom(p)
    return Dagger(Plus(InjL(n, n), Comp(p, InjR(n, n))))


def dagger_as_while(p: Term) -> Term:
    """p-dagger = inr ; while (inl (+) inr) [inl, p] ; [id, delta]."""
    ty = type_of(p)
    n, k = ty.dom, ty.cod - ty.dom
    cond = oplus(InjL(k, n), InjR(k, n))
    from .syntax import WhileDec
    loop = WhileDec(cond, Cotuple(InjL(k, n), p))
    return Comp(Comp(InjR(k, n), loop), Cotuple(Id(k), delta(n, k)))


def star_as_while(p: Term) -> Term:
    """p* = inr ; while [0, inr] [inl, inl + p;inr] ; [id, delta]."""
    n = _dom(p)
    cond = Cotuple(Zero(n, n + n), InjR(n, n))
    body = Cotuple(InjL(n, n), Plus(InjL(n, n), Comp(p, InjR(n, n))))
    return Comp(Comp(InjR(n, n), WhileTest(cond, body)), Cotuple(Id(n), delta(n, n)))


def translate(direction: str, t: Term) -> Term:
    """Rewrite the outermost construct of ``t`` into another iteration form.

    The result may contain derived nodes (``Dagger``, ``WhileTest``,
    ``WhileDec``); pass it through ``desugar`` before compiling.
    """
    from .syntax import Dagger as DaggerNode, WhileDec, WhileTest as WT

    if direction == "star->dagger":
        _expect(t, Star, direction)
        return star_as_dagger(t.body)
    if direction == "star->while":
        _expect(t, Star, direction)
        return star_as_while(t.body)
    if direction == "dagger->star":
        _expect(t, DaggerNode, direction)
        return dagger(t.body)
    if direction == "dagger->while":
        _expect(t, DaggerNode, direction)
        return dagger_as_while(t.body)
    if direction == "while->star":
        _expect(t, WT, direction)
        return Comp(Star(Comp(t.cond, t.body)), complement(t.cond))
    if direction == "while->dagger":
        _expect(t, (WT, WhileDec), direction)
        if isinstance(t, WT):
            d = test_to_dec(t.cond)
        else:
            d = t.cond
        n = _decision_dom(d)
        return DaggerNode(Comp(d, Cotuple(InjL(n, n), Comp(t.body, InjR(n, n)))))
    raise ValueError(f"unknown direction {direction!r}")


def _expect(t, cls, direction):
    if not isinstance(t, cls):
        raise TypeMismatch(f"{direction} does not apply to {t}")
