import random

import pytest
from hypothesis import given, settings, strategies as st

from kicat.errors import NotTame
from kicat.laws import GENERAL, TAME, TermGen
from kicat.oracle import (
    CrossConfig, compare_bounded, cross_check, engine_support, expand, render_support,
    support_lang, term_trunc,
)
from kicat.parser import parse_term
from kicat.rattree import compile
from kicat.syntax import Signature, desugar

from conftest import build, build_pair

T_ATOM, NOT_T = 1, 0


def test_expand_examples(sig):
    assert expand(build("t", sig), 1, 0) == (frozenset({(("x", (T_ATOM,), 0), 1)}),)
    assert expand(build("0", sig), 3, 3) == (frozenset(),)
    (tree,) = expand(build("f", sig), 1, 1)
    heads = [e for e, _ in tree]
    assert sorted(e[1] for e in heads) == [(NOT_T,), (T_ATOM,)]
    for e, w in tree:
        assert e[0] == "f" and e[2] == "f" and w == 1
        left, right = e[3]
        assert {x for x, _ in left} == {("x", (a,), 0) for a in (0, 1)}
        assert {x for x, _ in right} == {("x", (a,), 1) for a in (0, 1)}


def test_expand_marks_the_depth_horizon(sig):
    (tree,) = expand(build("a", sig), 2, 0)
    assert {e[0] for e, _ in tree} == {"h"}


def test_compare_bounded_examples(sig):
    p = build("u;a*", sig)
    assert compare_bounded(p, p, 3, 3)
    assert not compare_bounded(*build_pair("id*", "id", sig), 0, 0)
    assert not compare_bounded(*build_pair("a;(u + v)", "a;u + a;v", sig), 1, 1)
    assert compare_bounded(*build_pair("u*", "id + u;u*", sig), 4, 2)


def test_support_of_two_steps():
    sig = Signature(actions=("u",))
    lang = support_lang(parse_term("u;u", sig), sig, 4)
    assert lang == (frozenset({((0, "u", 0, "u", 0), 0)}),)
    assert render_support(lang[0], sig) == ["<> u <> u <> -> exit#0"]


def test_support_of_while_loop():
    sig = Signature(actions=("u",), tests=("t",))
    t = desugar(parse_term("while t do u od", sig))
    (lang,) = support_lang(t, sig, 2)
    t1, t0 = 1, 0
    want = {(t0,)}
    want |= {(t1, "u", t0)}
    want |= {(t1, "u", t1, "u", t0)}
    assert {g for g, _ in lang} == want
    assert {i for _, i in lang} == {0}


def test_support_edge_cases(sig):
    assert support_lang(parse_term("0", sig), sig, 3) == (frozenset(),)
    with pytest.raises(NotTame):
        support_lang(parse_term("a", sig), sig, 3)
    lang = support_lang(parse_term("[u, v]", sig), sig, 0)
    assert lang == (frozenset(), frozenset())


def test_cross_check_star_free(sig):
    t = desugar(parse_term("f(u;t, a;v) + u;inl@(1,1);[v, 0]", sig))
    rep = cross_check(t, sig)
    assert set(rep.checks) == {"expand", "star-free-total"}
    assert rep.ok


def test_term_trunc_matches_expand_on_star(sig):
    t = desugar(parse_term("(t;u + a)*", sig))
    rep = cross_check(t, sig, CrossConfig(l=3, d=2, maxlen=3))
    assert rep.ok
    assert term_trunc(t, sig, 0, 0)


SIG = Signature.default()
seeds = st.integers(0, 10**6)


def _gen(seed, cls):
    rng = random.Random(seed)
    n, k = rng.randint(1, 2), rng.randint(1, 2)
    return desugar(TermGen(SIG, rng).term(cls, n, k, rng.randint(1, 12)))


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_engine_agrees_with_structural_truncation(seed):
    t = _gen(seed, GENERAL)
    assert cross_check(t, SIG, CrossConfig(l=3, d=2, maxlen=3)).ok


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_engine_support_agrees_on_tame_terms(seed):
    t = _gen(seed, TAME)
    assert support_lang(t, SIG, 4) == engine_support(compile(t, SIG), 4)
