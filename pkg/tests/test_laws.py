import random

import pytest
from hypothesis import given, settings, strategies as st

from kicat.equiv import replay
from kicat.errors import UnsatisfiableRequest
from kicat.laws import (
    GENERAL, TAME, TEST, FuzzConfig, SuiteReport, TermGen, catalog, check_law, fuzz,
    gen_term, law_named, select,
)
from kicat.rattree import Machine, compile, is_tame, is_test
from kicat.syntax import (
    Gen, MorphType, Signature, Star, TermClass, classify, desugar, symbols, type_of,
)

EXPECTED = {
    "kic": ["coproduct-inl", "coproduct-inr", "coproduct-eta", "coproduct-fusion",
            "grove-zero", "grove-idem", "grove-comm", "grove-assoc", "zero-left",
            "distributivity-right", "tame-zero-right", "left-distributivity-tame",
            "star-fix", "star-sum", "star-uni"],
    "copr": ["copr-join"],
    "kic-derived": ["example-sqr"],
    "conway": ["conway-naturality", "conway-dinaturality", "conway-codiagonal",
               "conway-fixpoint", "conway-uniformity"],
    "while-dec": ["dw-fix", "dw-or", "dw-and", "dw-uni"],
    "while-test": ["tw-fix", "tw-or", "tw-and", "tw-uni"],
    "while-eqs": ["while-exit-guard", "while-post-test", "while-test-in-body", "while-split"],
    "tests-dec": ["td-retract", "td-linear-zero", "td-linear-plus", "td-codiag",
                  "td-and-idem", "td-or-idem", "td-or", "td-and", "td-neg"],
    "invalid": ["star-idempotent", "star-of-star", "left-distributivity-general",
                "right-zero-general"],
}
RULES = {"star-uni", "conway-uniformity", "dw-uni", "tw-uni"}


def test_catalog_coverage():
    laws = catalog()
    names = [law.name for law in laws]
    assert len(names) == len(set(names))
    by_group = {}
    for law in laws:
        by_group.setdefault(law.group, []).append(law.name)
    for group, want in EXPECTED.items():
        assert by_group[group] == want
    assert {law.name for law in laws if law.is_rule} == RULES
    assert {law.name for law in laws if not law.valid} == set(EXPECTED["invalid"])


def test_catalog_trial_budgets():
    for law in catalog():
        if not law.valid:
            assert law.trials == 50
        elif law.group == "kic":
            assert law.trials == 200
        else:
            assert law.trials == 100


def test_catalog_examples():
    fix = law_named("star-fix")
    env = {"p": gen_term(3, TAME, MorphType(1, 1), 4), "n": 1}
    lhs, rhs = fix.build(**env)
    assert lhs == Star(env["p"])
    idem = law_named("star-idempotent")
    assert not idem.valid
    assert "id" in idem.text
    uni = law_named("star-uni")
    assert uni.vars["u"].cls == TAME


def test_select():
    assert [law.name for law in select(["star-fix"])] == ["star-fix"]
    assert len(select(["conway"])) == 5
    assert len(select(["all"])) == len(catalog())
    assert select([]) == []
    with pytest.raises(KeyError):
        select(["no-such-law"])


# -- generator contract -------------------------------------------------------------------

SIG = Signature.default()
seeds = st.integers(0, 10**6)
dims = st.integers(1, 2)


@given(seeds, st.sampled_from([GENERAL, TAME, TEST]), dims, dims, st.integers(1, 12))
@settings(max_examples=150, deadline=None)
def test_generator_class_and_type(seed, cls, n, k, size):
    if cls == TEST:
        k = n
    t = gen_term(seed, cls, MorphType(n, k), size)
    assert type_of(t, SIG) == MorphType(n, k)
    got = classify(t)
    if cls == TEST:
        assert got == TermClass.TEST
    elif cls == TAME:
        assert got != TermClass.GENERAL
        assert is_tame(compile(desugar(t), SIG))
    else:
        assert symbols(t, Gen)
    assert gen_term(seed, cls, MorphType(n, k), size) == t


@given(seeds, st.integers(1, 8))
@settings(max_examples=60, deadline=None)
def test_generated_two_by_two_tests_are_tests(seed, size):
    t = gen_term(seed, TEST, MorphType(2, 2), size)
    assert is_test(compile(desugar(t), SIG))


def test_generator_rejects_impossible_requests():
    with pytest.raises(UnsatisfiableRequest):
        gen_term(0, TEST, MorphType(1, 2), 4)
    with pytest.raises(UnsatisfiableRequest):
        gen_term(0, GENERAL, MorphType(1, 1), 0)


def test_star_is_damped_for_large_terms():
    def stars(t):
        return isinstance(t, Star) + sum(stars(c) for c in t.children())

    g = TermGen(SIG, random.Random(1))
    small = sum(stars(g.term(TAME, 1, 1, 6)) for _ in range(300))
    big = sum(stars(g.term(TAME, 1, 1, 12)) for _ in range(300))
    assert big < 2 * small


# -- checking -------------------------------------------------------------------------

def test_star_fix_passes_all_trials():
    rep = check_law(law_named("star-fix"), trials=200)
    assert (rep.trials, rep.kept, rep.passes) == (200, 200, 200)
    assert rep.result == "pass" and rep.ok
    assert rep.max_seconds < 1.0


def test_star_idempotent_refuted_at_first_trial():
    rep = check_law(law_named("star-idempotent"), trials=50)
    assert rep.trials == 1
    assert rep.result == "refuted" and rep.ok
    assert "inf vs 1" in rep.counterexample.witness_text


def test_left_distributivity_counterexample_mentions_an_operation():
    law = law_named("left-distributivity-general")
    rep = check_law(law)
    assert rep.result == "refuted"
    cx = rep.counterexample
    assert symbols(cx.instance["p"], Gen)
    M = Machine(SIG)
    p, q = compile(cx.lhs, SIG, M), compile(cx.rhs, SIG, M)
    assert replay(p, q, cx.witness)


def test_tame_left_distributivity_passes():
    rep = check_law(law_named("left-distributivity-tame"), trials=200)
    assert rep.passes == rep.kept == 200


def test_uniformity_rule_is_not_vacuous():
    rep = check_law(law_named("star-uni"), trials=60)
    assert rep.result == "pass"
    assert rep.kept >= 0.3 * rep.trials


def test_fuzz_reports_are_deterministic_and_parse():
    cfg = FuzzConfig(laws=("star-sum", "star-uni", "star-idempotent"), trials=12, seed=5)
    a, b = fuzz(cfg).to_text(), fuzz(cfg).to_text()
    assert a == b
    assert a.startswith("kicat-fuzz-report 1\nseed 5\n")
    rows = SuiteReport.parse(a)
    assert [r[0] for r in rows] == ["star-sum", "star-uni", "star-idempotent"]
    assert rows[2][1] == "invalid" and rows[2][2]["result"] == "refuted"
    assert a.rstrip().endswith("summary laws=3 unexpected=0")


def test_fuzz_parallel_matches_serial():
    cfg = FuzzConfig(laws=("conway",), trials=5, seed=2)
    serial = fuzz(cfg).to_text()
    cfg.jobs = 2
    assert fuzz(cfg).to_text() == serial


def test_empty_fuzz():
    rep = fuzz(FuzzConfig(laws=()))
    assert rep.laws == [] and rep.ok
    assert "summary laws=0 unexpected=0" in rep.to_text()


# -- exhaustive checking ----------------------------------------------------------------

def test_enumerated_test_counts():
    from kicat.laws import enumerate_tests
    from kicat.syntax import is_test_form
    # 1 -> 1: four leaves; each binary node picks + or ; and two subterms
    one = enumerate_tests(SIG, 1, 6)
    assert [len(one[k]) for k in (1, 3, 5)] == [4, 2 * 4 * 4, 2 * 2 * 4 * 32]
    two = enumerate_tests(SIG, 2, 6)
    assert [len(two[k]) for k in (1, 3, 5)] == [2, 12, 112]
    assert all(is_test_form(t) for ts in two.values() for t in ts)
    assert not any(two[k] for k in (2, 4, 6))


def test_exhaustive_check_catches_a_false_law():
    from kicat.laws import Law, Var, check_law_exhaustive
    from kicat.syntax import Plus
    bogus = Law("or-absorbs", "probe", "b + c = b",
                {"b": Var(TEST, "n", "n"), "c": Var(TEST, "n", "n")},
                lambda b, c, **_: (Plus(b, c), b), dims=("n",))
    rep = check_law_exhaustive(bogus, 1, max_size=2)
    assert rep.trials == 16
    assert rep.result == "fail" and rep.counterexample is not None
    # holds iff atoms(c) is a subset of atoms(b); leaves are {0,1}, {}, {1}, {0}
    subset_pairs = 4 + 1 + 2 + 2
    assert rep.passes == subset_pairs


def test_exhaustive_pool_for_non_test_variables():
    from kicat.laws import check_law_exhaustive
    rep = check_law_exhaustive(law_named("td-linear-plus"), 1, max_size=3, pool_size=2)
    assert rep.trials == (4 + 32) * 4
    assert rep.result == "pass"
