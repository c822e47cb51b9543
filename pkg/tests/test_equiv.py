import random

import pytest
from hypothesis import given, settings, strategies as st

from kicat.equiv import (
    ActStep, ExitMismatch, OpStep, SigmaMismatch, equal, lemma_bisim_equal, minimize,
    replay, state_count, witness,
)
from kicat.errors import TypeMismatch
from kicat.laws import GENERAL, TermGen
from kicat.rattree import Machine, compile, m_comp, m_plus, m_star
from kicat.syntax import Signature, desugar
from kicat.weights import Weight

from conftest import build, build_pair, same


@pytest.mark.parametrize("lhs, rhs", [
    ("u*", "id + u;u*"),
    ("(u + v)*", "u*;(v;u*)*"),
    ("t;u + ~t;u", "u"),
    ("[inl@(1,1), inr@(1,1)]", "id@2"),
    ("(t;u)*;~t", "while t do u od"),
])
def test_equal_holds(sig, lhs, rhs):
    assert same(lhs, rhs, sig)


@pytest.mark.parametrize("lhs, rhs", [
    ("id*", "id"),
    ("u;v", "v;u"),
    ("a;(u + v)", "a;u + a;v"),
    ("f(u, v)", "f(v, u)"),
    ("u*;u*", "u*;u"),
    ("f(u, v);0", "0"),
])
def test_equal_refutes(sig, lhs, rhs):
    assert not same(lhs, rhs, sig)


def test_type_mismatch_raises(sig):
    with pytest.raises(TypeMismatch):
        equal(build("f", sig), build("u", sig))


def test_id_star_witness(sig):
    p, q = build_pair("id*", "id", sig)
    w = witness(p, q)
    assert w.moves == ()
    assert isinstance(w.discrepancy, ExitMismatch)
    assert (w.discrepancy.left, w.discrepancy.right) == (Weight.INF, Weight.ONE)
    assert replay(p, q, w)
    assert w.render(sig) == "root 0\nexit(<>,0): inf vs 1"
    assert witness(*build_pair("u", "u", sig)) is None


def test_witness_through_action_and_operation(sig):
    p, q = build_pair("u;f(u, v)", "u;f(u, u)", sig)
    w = witness(p, q)
    kinds = [type(m) for m in w.moves]
    assert kinds[0] is ActStep and OpStep in kinds
    assert w.moves[kinds.index(OpStep)].child == 1
    assert replay(p, q, w)
    assert "enter" in w.render(sig)


def test_sigma_mismatch_witness(sig):
    p, q = build_pair("f(u, v) + f(u;u, v;v)", "f(u, v;v) + f(u;u, v)", sig)
    w = witness(p, q)
    assert isinstance(w.discrepancy, SigmaMismatch)
    assert replay(p, q, w)
    assert "sigma(" in w.render(sig)


def test_replay_rejects_foreign_witness(sig):
    p, q = build_pair("id*", "id", sig)
    w = witness(p, q)
    r, s = build_pair("u", "u", sig)
    assert not replay(r, s, w)


def test_minimize_examples(sig):
    m = minimize(build("id", sig))
    assert state_count(m) == 1
    m = minimize(build("u + u;id + (id;u)", sig))
    assert state_count(m) == 2
    assert state_count(minimize(build("0", sig))) == 0
    unrolled = build("id + u;(u*)", sig)
    assert state_count(minimize(unrolled)) == state_count(minimize(build("u*", sig)))


def test_minimize_resampled_iteration():
    sig = Signature(actions=(), tests=(), ops=(("a", 1), ("b", 1)))
    p = build("([a;inl@(1,1) + inr@(1,1), b;inr@(1,1) + inl@(1,1)])*", sig)
    m = minimize(p)
    assert state_count(m) == 1
    assert m.roots[0] == m.roots[1]
    assert equal(m, p)


def test_lemma_bisim_gap_probe(sig):
    p, q = build_pair("f(u, v) + f(u;u, v;v)", "f(u, v;v) + f(u;u, v)", sig)
    assert lemma_bisim_equal(p, q)
    assert not equal(p, q)


SIG = Signature.default()


def _gen(seed, size):
    return desugar(TermGen(SIG, random.Random(seed)).term(GENERAL, 1, 1, size))


seeds = st.integers(0, 10**6)
sizes = st.integers(1, 10)


@given(seeds, sizes)
@settings(max_examples=60, deadline=None)
def test_minimize_is_equal_and_idempotent(seed, size):
    p = compile(_gen(seed, size), SIG)
    m = minimize(p)
    assert equal(m, p)
    mm = minimize(m)
    assert state_count(mm) == state_count(m)
    m = minimize(p)
    for a, b in zip(mm.machine.nodes, m.machine.nodes):
        assert (a.gtrans, a.exits, a.souts) == (b.gtrans, b.exits, b.souts)


@given(seeds, seeds, sizes)
@settings(max_examples=60, deadline=None)
def test_equality_is_an_equivalence(s1, s2, size):
    M = Machine(SIG)
    p = compile(_gen(s1, size), SIG, M)
    q = compile(_gen(s2, size), SIG, M)
    assert equal(p, p)
    assert equal(p, q) == equal(q, p)
    assert equal(p, q) == (witness(p, q) is None)
    if not equal(p, q):
        assert replay(p, q, witness(p, q))
    if equal(m_plus(p, q), q):
        assert equal(m_plus(q, p), q)


@given(seeds, seeds, seeds, sizes)
@settings(max_examples=40, deadline=None)
def test_equality_is_a_congruence(s1, s2, s3, size):
    M = Machine(SIG)
    p = compile(_gen(s1, size), SIG, M)
    p2 = minimize(p)
    r = compile(_gen(s3, size), SIG, M)
    assert equal(m_plus(p, r), m_plus(p2, r))
    assert equal(m_comp(r, p), m_comp(r, M.adopt(p2)))
    assert equal(m_comp(p, r), m_comp(M.adopt(p2), r))
    assert equal(m_star(p), m_star(M.adopt(p2)))


@given(seeds, sizes)
@settings(max_examples=40, deadline=None)
def test_equal_refines_lemma_bisim(seed, size):
    M = Machine(SIG)
    p = compile(_gen(seed, size), SIG, M)
    q = minimize(p)
    assert lemma_bisim_equal(p, q)
