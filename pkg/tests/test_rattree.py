import random

import pytest
from hypothesis import given, settings, strategies as st

from kicat.equiv import equal
from kicat.errors import IndexOutOfArity, TypeMismatch
from kicat.laws import GENERAL, TAME, TermGen
from kicat.rattree import (
    EMPTY, Machine, Morphism, closure, compile, is_tame, is_test, join_states, m_comp,
    scale_state, to_definable, to_dot,
)
from kicat.syntax import (
    Act, Comp, Gen, Id, InjL, MorphType, Plus, Signature, Star, Test, desugar,
)
from kicat.weights import Weight

from conftest import build


def test_compile_identity_and_test(sig):
    M = Machine(sig)
    p = compile(Id(1), sig, M)
    assert M.output_of(p.roots[0]) == {(0, 0): Weight.ONE, (1, 0): Weight.ONE}
    b = compile(Test("t"), sig, M)
    atom_t = 1  # bit 0 set means t holds
    assert M.output_of(b.roots[0]) == {(atom_t, 0): Weight.ONE}


def test_star_of_identity_exits_infinite(sig):
    p = build("id*", sig)
    assert set(p.machine.output_of(p.roots[0]).values()) == {Weight.INF}


def test_action_derivative(sig):
    p = build("u;v", sig)
    M = p.machine
    S = p.roots[0]
    assert M.deriv_action(S, 0, "v") == EMPTY
    T = M.deriv_action(S, 0, "u")
    U = M.deriv_action(T, 1, "v")
    assert M.output_of(U) == {(0, 0): 1, (1, 0): 1}
    assert M.output_of(S) == {}


def test_op_derivative(sig):
    p = build("f(u, v)", sig)
    M = p.machine
    S = p.roots[0]
    left = M.deriv_op(S, 0, "f", 0)
    assert M.deriv_action(left, 1, "u") != EMPTY
    assert M.deriv_action(left, 1, "v") == EMPTY
    with pytest.raises(IndexOutOfArity):
        M.deriv_op(S, 0, "f", 2)
    with pytest.raises(IndexOutOfArity):
        M.deriv_op(S, 0, "g", 0)


def test_weights_propagate_through_star(sig):
    p = build("(id + u)*", sig)
    M = p.machine
    assert set(M.output_of(p.roots[0]).values()) == {Weight.INF}
    T = M.deriv_action(p.roots[0], 0, "u")
    assert set(w for _, w in T) >= {2}


def test_closure_sizes(sig):
    assert len(closure(build("t", sig))) == 1
    assert len(closure(build("u", sig))) == 2
    assert len(closure(build("(t;u)*", sig))) <= 4
    assert len(closure(build("0", sig))) == 0


def test_tame_and_test_predicates(sig):
    assert is_tame(build("u*;v", sig))
    assert not is_tame(build("u;a", sig))
    assert is_test(build("t + ~t;t", sig))
    assert not is_test(build("id*", sig))
    assert not is_test(build("u", sig))
    assert is_test(build("[inl@(1,1), 0@(1,2)]", sig))


def test_mixing_machines_and_types(sig):
    p = build("u", sig)
    q = build("v", sig)
    r = m_comp(p, q)
    assert equal(r, build("u;v", sig))
    with pytest.raises(TypeMismatch):
        m_comp(build("f", sig), p)
    with pytest.raises(TypeMismatch):
        compile(Act("u"), sig, Machine(Signature(actions=("u",))))


def test_to_definable_examples(sig):
    d = to_definable(build("u", sig))
    assert d.m == 2
    assert equal(d.recompile(), build("u", sig))
    assert to_definable(build("id", sig)).m == 1
    e = to_definable(build("f(u, a)", sig))
    assert equal(e.recompile(), build("f(u, a)", sig))
    again = compile(e.term(), sig, e.inj.machine)
    assert equal(again, build("f(u, a)", sig))


def test_dot_export(sig):
    text = to_dot(build("t;u + a", sig))
    assert text.startswith("digraph morphism {")
    assert 'label="<t>/u"' in text
    assert 'label="<t>/a·0"' in text
    assert "style=dashed" in text
    assert text.rstrip().endswith("}")


# -- properties -----------------------------------------------------------------------

SIG = Signature.default()


def _gen(seed, cls, n, k, size):
    return desugar(TermGen(SIG, random.Random(seed)).term(cls, n, k, size))


seeds = st.integers(0, 10**6)


def _expected_after_action(M, p, q, S, a, u):
    """Action derivative of a composite per the composition rule."""
    head = M.compose_roots((M.deriv_action(S, a, u),), q.roots)[0]
    parts = [head]
    for (b, j), w in M.output_of(S).items():
        if b == a:
            parts.append(scale_state(M.deriv_action(q.roots[j], a, u), int(w)))
    return join_states(*parts)


@given(seeds, st.integers(1, 2), st.integers(1, 8), st.integers(1, 8))
@settings(max_examples=80, deadline=None)
def test_composition_derivative_rule(seed, k, sp, sq):
    p_t = _gen(seed, GENERAL, 1, k, sp)
    q_t = _gen(seed + 1, GENERAL, k, 1, sq)
    M = Machine(SIG)
    p, q = compile(p_t, SIG, M), compile(q_t, SIG, M)
    r = m_comp(p, q)
    S, R = p.roots[0], r.roots[0]
    for a in range(SIG.natoms):
        for u in SIG.actions:
            got = Morphism(MorphType(1, 1), (M.deriv_action(R, a, u),), M)
            want = Morphism(MorphType(1, 1), (_expected_after_action(M, p, q, S, a, u),), M)
            assert equal(got, want)
        out_r = M.output_of(R)
        for i in range(q.cod):
            w = 0
            for (b, j), v in M.output_of(S).items():
                if b == a:
                    x = M.output_of(q.roots[j]).get((a, i), 0)
                    w = max(w, 0 if not x else max(int(v), int(x)))
            assert int(out_r.get((a, i), 0)) == w


@given(seeds, st.integers(1, 10))
@settings(max_examples=60, deadline=None)
def test_star_fixpoint_and_plus_are_semantic(seed, size):
    p_t = _gen(seed, TAME, 1, 1, size)
    q_t = _gen(seed + 7, GENERAL, 1, 1, size)
    M = Machine(SIG)
    star = compile(Star(p_t), SIG, M)
    unfold = compile(Plus(Id(1), Comp(p_t, Star(p_t))), SIG, M)
    assert equal(star, unfold)
    assert equal(compile(Plus(q_t, q_t), SIG, M), compile(q_t, SIG, M))


@given(seeds, st.sampled_from([TAME, GENERAL]), st.integers(1, 2), st.integers(1, 2),
       st.integers(1, 12))
@settings(max_examples=60, deadline=None)
def test_definable_form_recompiles_equal(seed, cls, n, k, size):
    t = _gen(seed, cls, n, k, size)
    p = compile(t, SIG)
    d = to_definable(p)
    assert d.m >= n
    assert equal(d.recompile(), p)
    assert is_tame(d.recompile()) == is_tame(p)


def test_compile_memoizes_subterms(sig):
    M = Machine(sig)
    t = desugar(Star(Comp(Test("t"), Act("u"))))
    p = compile(t, sig, M)
    n = len(M)
    assert compile(t, sig, M) is p
    assert len(M) == n
    assert compile(Gen("f", 2), sig, M).type == MorphType(1, 2)
    assert compile(InjL(1, 1), sig, M).type == MorphType(1, 2)
