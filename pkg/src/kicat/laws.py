"""The law catalog, a typed random term generator and the fuzzing harness.

A law is a pair of term templates over metavariables.  Each metavariable has
a class (general, tame or test) and a type written with dimension names,
e.g. ``"k+n"``.  Rules carry premises; instances whose premises do not hold
are discarded.  Premise-biased templates build instances that satisfy the
premises by construction so rules are not checked vacuously.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import control as C
from .equiv import equal, witness
from .errors import BudgetExceeded, KicatError, UnsatisfiableRequest
from .rattree import Machine, compile
from .syntax import (
    Act, Comp, Cotuple, Gen, Id, InjL, InjR, MorphType, NegTest, Plus, Signature,
    Star, Term, TermClass, Test, Zero, complement, cotuple_of, desugar, show, symbols,
    type_of,
)

GENERAL, TAME, TEST = TermClass.GENERAL, TermClass.TAME, TermClass.TEST

REPORT_HEADER = "kicat-fuzz-report 1"
DEFAULT_MAX_SIZE = 12


# -- term generation ------------------------------------------------------------------

class TermGen:
    """Random well-typed terms of a given class, type and approximate size."""

    def __init__(self, sig: Signature, rng: random.Random):
        self.sig = sig
        self.rng = rng

    def term(self, cls: TermClass, n: int, k: int, size: int) -> Term:
        if size < 1:
            raise UnsatisfiableRequest("size must be at least 1")
        if cls == TEST:
            if n != k:
                raise UnsatisfiableRequest(f"no test of non-square type {n}->{k}")
            return self.test(n, size)
        return self.morph(cls == GENERAL, n, k, size)

    def morph(self, general, n, k, size):
        r = self.rng
        if size <= 1:
            return self.leaf(general, n, k)
        opts = []
        if size >= 3:
            opts += ["plus", "comp", "comp"]
            if n >= 2:
                opts += ["cotuple", "cotuple"]
            if n == k:
                opts.append("guard")
        # star is damped for big terms so nested loops stay manageable
        if n == k and (size <= 8 or r.random() < 0.25):
            opts += ["star"] if size >= 3 else ["star", "leaf"]
        if not opts:
            return self.leaf(general, n, k)
        op = r.choice(opts)
        if op == "leaf":
            return self.leaf(general, n, k)
        if op == "star":
            return Star(self.morph(general, n, n, size - 1))
        a = r.randint(1, size - 2)
        b = size - 1 - a
        if op == "plus":
            return Plus(self.morph(general, n, k, a), self.morph(general, n, k, b))
        if op == "guard":
            return Comp(self.test(n, a), self.morph(general, n, k, b))
        if op == "cotuple":
            n1 = r.randint(1, n - 1)
            return Cotuple(self.morph(general, n1, k, a), self.morph(general, n - n1, k, b))
        m = r.choice((1, 1, 2)) if general or k != 1 else r.choice((1, 2))
        return Comp(self.morph(general, n, m, a), self.morph(general, m, k, b))

    def leaf(self, general, n, k):
        r, sig = self.rng, self.sig
        cands = []
        if n == k:
            cands.append(Id(n))
        if n == 1 and k == 1:
            cands += [Act(u) for u in sig.actions] * 2
            cands += [Test(t) for t in sig.tests] + [NegTest(t) for t in sig.tests]
        if general and n == 1:
            cands += [Gen(f, ar) for f, ar in sig.ops if ar == k] * 3
        if k > n:
            cands += [InjL(n, k - n), InjR(k - n, n)]
        if n >= 2 and (not cands or r.random() < 0.5):
            n1 = r.randint(1, n - 1)
            return Cotuple(self.leaf(general, n1, k), self.leaf(general, n - n1, k))
        if not cands or r.random() < 0.08:
            return Zero(n, k)
        return r.choice(cands)

    def test(self, n, size):
        r, sig = self.rng, self.sig
        if size <= 1:
            if n == 1:
                cands = [Id(1), Zero(1, 1)] + [Test(t) for t in sig.tests] * 2 \
                    + [NegTest(t) for t in sig.tests] * 2
                return r.choice(cands)
            return r.choice([Id(n), Zero(n, n), self.dsum(n, 1), self.dsum(n, 1)])
        opts = ["plus", "comp"] if size >= 3 else []
        if n >= 2:
            opts += ["dsum", "dsum"]
        if not opts:
            return self.test(n, 1)
        op = r.choice(opts)
        if op == "dsum":
            return self.dsum(n, size)
        a = r.randint(1, size - 2)
        b = size - 1 - a
        node = Plus if op == "plus" else Comp
        return node(self.test(n, a), self.test(n, b))

    def dsum(self, n, size):
        r = self.rng
        n1 = r.randint(1, n - 1)
        n2 = n - n1
        budget = max(size - 1, 0)
        a = r.randint(0, budget)
        return direct_sum_test(self._part(n1, a), self._part(n2, budget - a), n1, n2)

    def _part(self, n, size):
        if size == 0:
            return Id(n) if self.rng.random() < 0.7 else Zero(n, n)
        return self.test(n, size)


def direct_sum_test(b1: Term, b2: Term, n1: int, n2: int) -> Term:
    """The test b1 (+) b2 on n1+n2, written in test form."""
    def part(b, inj, n):
        if isinstance(b, Id):
            return inj
        if isinstance(b, Zero):
            return Zero(n, n1 + n2)
        return Comp(b, inj)
    return Cotuple(part(b1, InjL(n1, n2), n1), part(b2, InjR(n1, n2), n2))


def gen_term(seed, cls: TermClass, ty: MorphType, size: int, sig: Signature | None = None) -> Term:
    """Deterministic in ``seed``.  General requests contain an operation
    symbol whenever the signature has one."""
    sig = sig or Signature.default()
    rng = random.Random(f"gen/{seed}")
    g = TermGen(sig, rng)
    t = g.term(cls, ty.dom, ty.cod, size)
    if cls == GENERAL and sig.ops:
        for _ in range(8):
            if symbols(t, Gen):
                break
            t = g.term(cls, ty.dom, ty.cod, size)
        if not symbols(t, Gen):
            t = Plus(t, _with_op(g, ty.dom, ty.cod))
    return t


def _with_op(g: TermGen, n: int, k: int) -> Term:
    """A small term n -> k that applies an operation on its first row."""
    f, ar = g.rng.choice(g.sig.ops)
    kids = [g.term(TAME, 1, k, 1) for _ in range(ar)]
    row = Comp(Gen(f, ar), cotuple_of(kids))
    if n == 1:
        return row
    return Cotuple(row, g.term(GENERAL, n - 1, k, 1))


# -- law representation --------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    cls: TermClass
    dom: str
    cod: str
    needs_op: bool = False

    def type_in(self, dims):
        return MorphType(_dim(self.dom, dims), _dim(self.cod, dims))


def _dim(expr, dims):
    return sum(int(x) if x.isdigit() else dims[x] for x in expr.split("+"))


@dataclass
class Law:
    name: str
    group: str
    text: str
    vars: dict
    build: Callable
    valid: bool = True
    dims: tuple = ()
    premises: Optional[Callable] = None
    templates: tuple = ()
    trials: int = 100
    sig: Optional[Signature] = None
    fixed_dims: dict = field(default_factory=dict)

    @property
    def polarity(self):
        return "valid" if self.valid else "invalid"

    @property
    def is_rule(self):
        return self.premises is not None

    def sides(self, env) -> tuple:
        lhs, rhs = self.build(**env)
        return desugar(lhs), desugar(rhs)

    def premise_pairs(self, env) -> list:
        if self.premises is None:
            return []
        return [(desugar(a), desugar(b)) for a, b in self.premises(**env)]


# -- reports --------------------------------------------------------------------------

@dataclass
class Counterexample:
    instance: dict
    lhs: Term
    rhs: Term
    witness: object = None
    witness_text: str = ""


@dataclass
class LawReport:
    name: str
    polarity: str
    trials: int = 0
    kept: int = 0
    passes: int = 0
    counterexample: Optional[Counterexample] = None
    error: str = ""
    max_seconds: float = 0.0  # slowest decision; not part of the text report

    @property
    def result(self):
        if self.error:
            return "error"
        if self.polarity == "valid":
            return "fail" if self.counterexample else "pass"
        return "refuted" if self.counterexample else "fail"

    @property
    def ok(self):
        return self.result in ("pass", "refuted")

    def lines(self, sig) -> list:
        out = [f"law {self.name} {self.polarity} trials={self.trials} kept={self.kept} "
               f"passes={self.passes} result={self.result}"]
        if self.error:
            out.append(f"  error: {self.error}")
        cx = self.counterexample
        if cx is not None:
            for name in sorted(cx.instance):
                out.append(f"  instance: {name} = {_show_value(cx.instance[name])}")
            out.append(f"  lhs: {show(cx.lhs)}")
            out.append(f"  rhs: {show(cx.rhs)}")
            for line in cx.witness_text.splitlines():
                out.append(f"  witness: {line}")
        return out


def _show_value(v):
    return show(v) if isinstance(v, Term) else str(v)


@dataclass
class SuiteReport:
    seed: int
    sig: Signature
    laws: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.laws)

    def to_text(self) -> str:
        lines = [REPORT_HEADER, f"seed {self.seed}", f"signature {self.sig.render()}"]
        for r in self.laws:
            lines += r.lines(self.sig)
        bad = sum(1 for r in self.laws if not r.ok)
        lines.append(f"summary laws={len(self.laws)} unexpected={bad}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> list:
        """Summary records ``(name, polarity, fields)`` from a text report."""
        lines = text.splitlines()
        if not lines or lines[0] != REPORT_HEADER:
            raise ValueError("not a fuzz report")
        out = []
        for line in lines:
            if line.startswith("law "):
                parts = line.split()
                fields_ = dict(p.split("=", 1) for p in parts[3:])
                out.append((parts[1], parts[2], fields_))
        return out


# -- checking -------------------------------------------------------------------------

def _sample_dims(law, rng):
    dims = {}
    for d in law.dims:
        if d in law.fixed_dims:
            dims[d] = law.fixed_dims[d]
        else:
            dims[d] = 1 if rng.random() < 0.7 else 2
    return dims


def _sample_vars(law, g, dims, max_size):
    env = {}
    for name, v in law.vars.items():
        ty = v.type_in(dims)
        size = g.rng.randint(1, max_size)
        t = g.term(v.cls, ty.dom, ty.cod, size)
        if v.needs_op and g.sig.ops:
            for _ in range(8):
                if symbols(t, Gen):
                    break
                t = g.term(v.cls, ty.dom, ty.cod, size)
        env[name] = t
    return env


def instantiate(law: Law, sig: Signature, rng: random.Random, trial: int,
                max_size: int = DEFAULT_MAX_SIZE) -> dict:
    """Dimensions and metavariable terms for one trial."""
    g = TermGen(sig, rng)
    dims = _sample_dims(law, rng)
    if law.templates and trial % 3 != 2:
        tpl = law.templates[(trial // 3) % len(law.templates)]
        dims, env = tpl(g, dims, max(2, max_size // 2))
    else:
        env = _sample_vars(law, g, dims, max_size)
    for name, v in law.vars.items():
        if name not in env:
            ty = v.type_in(dims)
            env[name] = g.term(v.cls, ty.dom, ty.cod, rng.randint(1, max_size))
        got = type_of(env[name], sig)
        want = v.type_in(dims)
        if got != want:
            raise KicatError(f"{law.name}: metavariable {name} has type {got}, expected {want}")
    env.update(dims)
    return env


def _decide(a, b, sig):
    M = Machine(sig)
    p, q = compile(a, sig, M), compile(b, sig, M)
    t0 = time.perf_counter()
    ok = equal(p, q)
    return ok, time.perf_counter() - t0, p, q


def check_law(law: Law, sig: Signature | None = None, trials: int | None = None,
              seed: int = 0, max_size: int = DEFAULT_MAX_SIZE) -> LawReport:
    """Fuzz one law.  Invalid laws stop at their first counterexample."""
    sig = law.sig or sig or Signature.default()
    trials = law.trials if trials is None else trials
    rep = LawReport(law.name, law.polarity)
    for i in range(trials):
        rng = random.Random(f"{seed}/{law.name}/{i}")
        env = instantiate(law, sig, rng, i, max_size)
        rep.trials += 1
        try:
            kept = True
            for a, b in law.premise_pairs(env):
                ok, dt, _, _ = _decide(a, b, sig)
                rep.max_seconds = max(rep.max_seconds, dt)
                if not ok:
                    kept = False
                    break
            if not kept:
                continue
            rep.kept += 1
            lhs, rhs = law.sides(env)
            ok, dt, p, q = _decide(lhs, rhs, sig)
            rep.max_seconds = max(rep.max_seconds, dt)
        except BudgetExceeded as e:
            rep.error = f"trial {i}: {e}"
            raise BudgetExceeded(str(e), partial=rep) from None
        if ok:
            rep.passes += 1
            continue
        if rep.counterexample is None:
            w = witness(p, q)
            inst = {k: v for k, v in env.items() if k in law.vars or k in law.dims}
            rep.counterexample = Counterexample(inst, lhs, rhs, w, w.render(sig) if w else "")
        if not law.valid:
            break
    return rep


# -- exhaustive checking over small tests ---------------------------------------------

def enumerate_tests(sig: Signature, n: int, max_size: int) -> dict:
    """All test-form terms on ``n``, keyed by node count up to ``max_size``.

    On 1 the leaves are the primitive tests, their negations, ``id`` and
    ``0``.  On larger objects the leaves are ``id``, ``0`` and direct sums
    ``[x, y]`` whose halves are an injection, zero, or a smaller test
    followed by an injection.
    """
    by_size: dict = {k: [] for k in range(1, max_size + 1)}
    if n == 1:
        leaves = [Id(1), Zero(1, 1)]
        for t in sig.tests:
            leaves += [Test(t), NegTest(t)]
        by_size[1].extend(leaves)
    else:
        by_size[1].extend([Id(n), Zero(n, n)])
    for k in range(2, max_size + 1):
        if n > 1:
            for n1 in range(1, n):
                n2 = n - n1
                left = _halves(sig, n1, n, InjL(n1, n2), k)
                right = _halves(sig, n2, n, InjR(n1, n2), k)
                for sl, xs in left.items():
                    for x in xs:
                        for y in right.get(k - 1 - sl, ()):
                            by_size[k].append(Cotuple(x, y))
        for sl in range(1, k - 1):
            for x in by_size[sl]:
                for y in by_size[k - 1 - sl]:
                    by_size[k].append(Plus(x, y))
                    by_size[k].append(Comp(x, y))
    return by_size


def _halves(sig, n, total, inj, budget):
    out = {1: [inj, Zero(n, total)]}
    inner = enumerate_tests(sig, n, budget - 4) if budget > 4 else {}
    for k, bs in inner.items():
        out.setdefault(k + 2, []).extend(Comp(b, inj) for b in bs)
    return out


def _size_splits(count, total):
    """Tuples of ``count`` positive sizes with sum at most ``total``."""
    if count == 0:
        yield ()
        return
    for k in range(1, total - count + 2):
        for rest in _size_splits(count - 1, total - k):
            yield (k,) + rest


def check_law_exhaustive(law: Law, n: int, max_size: int = 6,
                         sig: Signature | None = None, pool_size: int = 3) -> LawReport:
    """Check ``law`` on every assignment of test-form terms to its test
    metavariables whose sizes sum to at most ``max_size``.  Other
    metavariables range over a fixed pool of generated terms; every
    dimension is set to ``n``."""
    sig = law.sig or sig or Signature.default()
    dims = {d: n for d in law.dims}
    dims.update(law.fixed_dims)
    tests = [k for k, v in law.vars.items() if v.cls == TEST]
    others = [k for k, v in law.vars.items() if v.cls != TEST]
    table = enumerate_tests(sig, n, max_size)
    pools = {}
    for k in others:
        v = law.vars[k]
        pools[k] = [gen_term(f"pool/{k}/{i}", v.cls, v.type_in(dims), 4, sig)
                    for i in range(pool_size)]
    rep = LawReport(law.name, law.polarity)
    M = Machine(sig)

    def assignments():
        for sizes in _size_splits(len(tests), max_size):
            lists = [table[k] for k in sizes]
            for ts in itertools.product(*lists):
                for os in itertools.product(*(pools[k] for k in others)):
                    env = dict(zip(tests, ts))
                    env.update(zip(others, os))
                    yield env

    for env in assignments():
        env.update(dims)
        rep.trials += 1
        lhs, rhs = law.sides(env)
        p, q = compile(lhs, sig, M), compile(rhs, sig, M)
        t0 = time.perf_counter()
        ok = equal(p, q)
        rep.max_seconds = max(rep.max_seconds, time.perf_counter() - t0)
        rep.kept += 1
        if ok:
            rep.passes += 1
        elif rep.counterexample is None:
            w = witness(p, q)
            inst = {k: v for k, v in env.items() if k in law.vars}
            rep.counterexample = Counterexample(inst, lhs, rhs, w, w.render(sig) if w else "")
    return rep


# -- fuzz suites ----------------------------------------------------------------------

@dataclass
class FuzzConfig:
    laws: tuple = ("all",)
    trials: Optional[int] = None
    seed: int = 0
    sig: Signature = field(default_factory=Signature.default)
    jobs: int = 1
    max_size: int = DEFAULT_MAX_SIZE


def select(names) -> list:
    """Resolve law names, group names and ``all``, keeping catalog order."""
    laws = catalog()
    by_name = {law.name: law for law in laws}
    groups = {law.group for law in laws}
    chosen = []
    for name in names:
        if name == "all":
            chosen += laws
        elif name in by_name:
            chosen.append(by_name[name])
        elif name in groups:
            chosen += [law for law in laws if law.group == name]
        else:
            raise KeyError(name)
    seen = set()
    out = []
    for law in chosen:
        if law.name not in seen:
            seen.add(law.name)
            out.append(law)
    return out


def _run_one(args):
    name, sig, trials, seed, max_size = args
    law = {x.name: x for x in catalog()}[name]
    try:
        return check_law(law, sig, trials, seed, max_size)
    except BudgetExceeded as e:
        return e.partial


def fuzz(config: FuzzConfig | None = None) -> SuiteReport:
    config = config or FuzzConfig()
    laws = select(config.laws)
    jobs = [(law.name, config.sig, config.trials, config.seed, config.max_size) for law in laws]
    if config.jobs > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    return SuiteReport(config.seed, config.sig, reports)


# -- catalog --------------------------------------------------------------------------

def _V(cls, dom, cod=None, needs_op=False):
    return Var(cls, dom, cod if cod is not None else dom, needs_op)


def _dia(b):
    return C.test_to_dec(b)


def _query(d):
    return C.dec_to_test(d)


def _neg(b):
    return complement(b)


def _n(t):
    return type_of(t).dom


# premise-biased templates; each returns (dims, partial environment)

def _star_uni_id(g, dims, size):
    n = dims["n"]
    p = g.term(GENERAL, n, n, g.rng.randint(1, size))
    return dict(dims, m=n), {"u": Id(n), "p": p, "q": p}


def _star_uni_inl(g, dims, size):
    n, extra = dims["n"], g.rng.choice((1, 1, 2))
    m = n + extra
    q = g.term(GENERAL, n, n, g.rng.randint(1, size))
    r = g.term(GENERAL, extra, m, g.rng.randint(1, size))
    return dict(dims, m=m), {"u": InjL(n, extra), "q": q, "p": Cotuple(Comp(q, InjL(n, extra)), r)}


def _star_uni_codiag(g, dims, size):
    m = 1
    p = g.term(GENERAL, m, m, g.rng.randint(1, size))
    return dict(dims, n=2 * m, m=m), {"u": C.codiag(m), "p": p, "q": C.oplus(p, p)}


def _star_uni_swap(g, dims, size):
    a, b = 1, g.rng.choice((1, 2))
    p = g.term(GENERAL, b + a, b + a, g.rng.randint(1, size))
    q = Comp(Comp(C.swap(a, b), p), C.swap(b, a))
    return dict(dims, n=a + b, m=a + b), {"u": C.swap(a, b), "p": p, "q": q}


def _star_uni_commute(g, dims, size):
    """u commutes with any polynomial in u."""
    act = Act(g.rng.choice(g.sig.actions)) if g.sig.actions else Id(1)
    p = act
    for _ in range(g.rng.randint(0, 3)):
        p = Plus(p, Id(1)) if g.rng.random() < 0.4 else Comp(p, act)
    return dict(dims, n=1, m=1), {"u": act, "p": p, "q": p}


def _uni_id(g, dims, size):
    k, n = dims["k"], dims["n"]
    p = g.term(GENERAL, n, k + n, g.rng.randint(1, size))
    return dict(dims, m=n), {"u": Id(n), "p": p, "q": p}


def _uni_inl(g, dims, size):
    k, n = dims["k"], dims["n"]
    extra = 1
    m = n + extra
    p = g.term(GENERAL, n, k + n, g.rng.randint(1, size))
    r = g.term(GENERAL, extra, k + m, g.rng.randint(1, size))
    q = Cotuple(Comp(p, C.oplus(Id(k), InjL(n, extra))), r)
    return dict(dims, m=m), {"u": InjL(n, extra), "p": p, "q": q}


def _uni_codiag(g, dims, size):
    k, m = dims["k"], 1
    q = g.term(GENERAL, m, k + m, g.rng.randint(1, size))
    p = Cotuple(Comp(q, C.oplus(Id(k), InjL(m, m))), Comp(q, C.oplus(Id(k), InjR(m, m))))
    return dict(dims, n=2 * m, m=m), {"u": C.codiag(m), "p": p, "q": q}


def _loop_uni_id(g, dims, size):
    n = dims["n"]
    b = g.test(n, g.rng.randint(1, 4))
    p = g.term(GENERAL, n, n, g.rng.randint(1, size))
    return dict(dims, m=n), {"u": Id(n), "v": Id(n), "b": b, "c": b, "p": p, "q": p}


def _loop_uni_inl(g, dims, size):
    n, extra = dims["n"], 1
    m = n + extra
    c = g.test(n, g.rng.randint(1, 4))
    other = g.test(extra, g.rng.randint(1, 3))
    q = g.term(GENERAL, n, n, g.rng.randint(1, size))
    r = g.term(GENERAL, extra, m, g.rng.randint(1, size))
    env = {"u": InjL(n, extra), "v": InjL(n, extra), "c": c,
           "b": direct_sum_test(c, other, n, extra), "q": q,
           "p": Cotuple(Comp(q, InjL(n, extra)), r)}
    return dict(dims, m=m), env


def _loop_uni_swap(g, dims, size):
    a, b_ = 1, 1
    n = a + b_
    c1, c2 = g.test(a, g.rng.randint(1, 3)), g.test(b_, g.rng.randint(1, 3))
    p = g.term(GENERAL, n, n, g.rng.randint(1, size))
    sw = C.swap(a, b_)
    env = {"u": sw, "v": sw, "b": direct_sum_test(c2, c1, b_, a),
           "c": direct_sum_test(c1, c2, a, b_), "p": p, "q": Comp(Comp(sw, p), sw)}
    return dict(dims, n=n, m=n), env


def _dw_uni(u, v, b, c, p, q, **_):
    return (Comp(u, C.while_dec(_dia(b), p)), Comp(C.while_dec(_dia(c), q), v))


def _dw_uni_premise(u, v, b, c, p, q, **_):
    d, e = _dia(b), _dia(c)
    m = _n(b)
    tt, ff = C.dtrue(m), C.dfalse(m)
    lhs = Comp(u, C.ite_dec(d, Comp(p, tt), ff))
    rhs = C.ite_dec(e, Comp(Comp(q, u), tt), Comp(v, ff))
    return [(lhs, rhs)]


def _sqr_body(p):
    n = _n(p)
    return Comp(p, Plus(Id(n), p))


def _tr_star_while_star(p):
    """Expand p* to a while loop, then the loop back to a star."""
    t = C.star_as_while(p)
    (inr_w, tail) = (t.left, t.right)
    w = inr_w.right
    return Comp(Comp(inr_w.left, C.translate("while->star", w)), tail)


def _tr_while_star_while(b, p):
    s = C.translate("while->star", C.WhileTest(b, p))
    star, tail = s.left, s.right
    return Comp(C.translate("star->while", star), tail)


def _tr_while_dagger_while(b, p):
    from .syntax import WhileTest
    dg = C.translate("while->dagger", WhileTest(b, p))
    return C.translate("dagger->while", dg)


def _tr_dagger_while_dagger(p):
    from .syntax import Dagger
    t = C.translate("dagger->while", Dagger(p))
    (left, tail) = t.left, t.right
    return Comp(Comp(left.left, C.translate("while->dagger", left.right)), tail)


def catalog() -> list:
    """Every law, in a fixed order."""
    from .syntax import Dagger, WhileTest
    G, T, B = GENERAL, TAME, TEST
    laws = []

    def law(name, group, text, vars_, build, **kw):
        laws.append(Law(name, group, text, vars_, build, **kw))

    # kleene iteration categories: coproducts, groves, linearity, star
    law("coproduct-inl", "kic", "inl;[p,q] = p",
        {"p": _V(G, "n", "k"), "q": _V(G, "m", "k")},
        lambda p, q, n, m, k: (Comp(InjL(n, m), Cotuple(p, q)), p), dims=("n", "m", "k"), trials=200)
    law("coproduct-inr", "kic", "inr;[p,q] = q",
        {"p": _V(G, "n", "k"), "q": _V(G, "m", "k")},
        lambda p, q, n, m, k: (Comp(InjR(n, m), Cotuple(p, q)), q), dims=("n", "m", "k"), trials=200)
    law("coproduct-eta", "kic", "[inl,inr] = id", {},
        lambda n, m: (Cotuple(InjL(n, m), InjR(n, m)), Id(n + m)), dims=("n", "m"), trials=200)
    law("coproduct-fusion", "kic", "[p,q];r = [p;r,q;r]",
        {"p": _V(G, "n", "k"), "q": _V(G, "m", "k"), "r": _V(G, "k", "l")},
        lambda p, q, r, **_: (Comp(Cotuple(p, q), r), Cotuple(Comp(p, r), Comp(q, r))),
        dims=("n", "m", "k", "l"), trials=200)
    law("grove-zero", "kic", "0 + p = p", {"p": _V(G, "n", "k")},
        lambda p, n, k: (Plus(Zero(n, k), p), p), dims=("n", "k"), trials=200)
    law("grove-idem", "kic", "p + p = p", {"p": _V(G, "n", "k")},
        lambda p, **_: (Plus(p, p), p), dims=("n", "k"), trials=200)
    law("grove-comm", "kic", "p + q = q + p", {"p": _V(G, "n", "k"), "q": _V(G, "n", "k")},
        lambda p, q, **_: (Plus(p, q), Plus(q, p)), dims=("n", "k"), trials=200)
    law("grove-assoc", "kic", "(p+q)+r = p+(q+r)",
        {"p": _V(G, "n", "k"), "q": _V(G, "n", "k"), "r": _V(G, "n", "k")},
        lambda p, q, r, **_: (Plus(Plus(p, q), r), Plus(p, Plus(q, r))), dims=("n", "k"), trials=200)
    law("zero-left", "kic", "0;p = 0", {"p": _V(G, "n", "k")},
        lambda p, m, n, k: (Comp(Zero(m, n), p), Zero(m, k)), dims=("m", "n", "k"), trials=200)
    law("distributivity-right", "kic", "(q+r);p = q;p + r;p",
        {"q": _V(G, "m", "n"), "r": _V(G, "m", "n"), "p": _V(G, "n", "k")},
        lambda p, q, r, **_: (Comp(Plus(q, r), p), Plus(Comp(q, p), Comp(r, p))),
        dims=("m", "n", "k"), trials=200)
    law("tame-zero-right", "kic", "u;0 = 0", {"u": _V(T, "n", "m")},
        lambda u, n, m, k: (Comp(u, Zero(m, k)), Zero(n, k)), dims=("n", "m", "k"), trials=200)
    law("left-distributivity-tame", "kic", "u;(p+q) = u;p + u;q",
        {"u": _V(T, "n", "m"), "p": _V(G, "m", "k"), "q": _V(G, "m", "k")},
        lambda u, p, q, **_: (Comp(u, Plus(p, q)), Plus(Comp(u, p), Comp(u, q))),
        dims=("n", "m", "k"), trials=200)
    law("star-fix", "kic", "p* = id + p;p*", {"p": _V(G, "n")},
        lambda p, n: (Star(p), Plus(Id(n), Comp(p, Star(p)))), dims=("n",), trials=200)
    law("star-sum", "kic", "(p+q)* = p*;(q;p*)*", {"p": _V(G, "n"), "q": _V(G, "n")},
        lambda p, q, n: (Star(Plus(p, q)), Comp(Star(p), Star(Comp(q, Star(p))))),
        dims=("n",), trials=200)
    law("star-uni", "kic", "u;p = q;u => u;p* = q*;u",
        {"u": _V(T, "n", "m"), "p": _V(G, "m"), "q": _V(G, "n")},
        lambda u, p, q, **_: (Comp(u, Star(p)), Comp(Star(q), u)), dims=("n", "m"),
        premises=lambda u, p, q, **_: [(Comp(u, p), Comp(q, u))],
        templates=(_star_uni_inl, _star_uni_codiag, _star_uni_swap, _star_uni_commute, _star_uni_id),
        trials=200)

    # category structure that the axioms take for granted
    law("comp-assoc", "category", "(p;q);r = p;(q;r)",
        {"p": _V(G, "n", "m"), "q": _V(G, "m", "k"), "r": _V(G, "k", "l")},
        lambda p, q, r, **_: (Comp(Comp(p, q), r), Comp(p, Comp(q, r))), dims=("n", "m", "k", "l"))
    law("comp-id", "category", "id;p = p = p;id", {"p": _V(G, "n", "k")},
        lambda p, n, k: (Comp(Comp(Id(n), p), Id(k)), p), dims=("n", "k"))

    law("copr-join", "copr", "[p,q] + [p',q'] = [p+p',q+q']",
        {"p": _V(G, "n", "k"), "q": _V(G, "m", "k"), "p2": _V(G, "n", "k"), "q2": _V(G, "m", "k")},
        lambda p, q, p2, q2, **_: (Plus(Cotuple(p, q), Cotuple(p2, q2)),
                                   Cotuple(Plus(p, p2), Plus(q, q2))),
        dims=("n", "m", "k"))

    law("example-sqr", "kic-derived", "p* = (p;(id+p))*", {"p": _V(G, "n")},
        lambda p, n: (Star(p), Star(_sqr_body(p))), dims=("n",))

    # conway iteration for the dagger
    law("conway-naturality", "conway", "p+;q = (p;(q (+) id))+",
        {"p": _V(G, "n", "k+n"), "q": _V(G, "k", "l")},
        lambda p, q, n, **_: (Comp(Dagger(p), q), Dagger(Comp(p, C.oplus(q, Id(n))))),
        dims=("n", "k", "l"))
    law("conway-dinaturality", "conway", "(p;[inl,q])+ = p;[id,(q;[inl,p])+]",
        {"p": _V(G, "n", "k+m"), "q": _V(G, "m", "k+n")},
        lambda p, q, n, k, m: (Dagger(Comp(p, Cotuple(InjL(k, n), q))),
                               Comp(p, Cotuple(Id(k), Dagger(Comp(q, Cotuple(InjL(k, m), p)))))),
        dims=("n", "k", "m"))
    law("conway-codiagonal", "conway", "(p;[id,inr])+ = p++",
        {"p": _V(G, "n", "k+n+n")},
        lambda p, n, k: (Dagger(Comp(p, Cotuple(Id(k + n), InjR(k, n)))), Dagger(Dagger(p))),
        dims=("n", "k"))
    law("conway-fixpoint", "conway", "p;[id,p+] = p+", {"p": _V(G, "n", "k+n")},
        lambda p, n, k: (Comp(p, Cotuple(Id(k), Dagger(p))), Dagger(p)), dims=("n", "k"))
    law("conway-uniformity", "conway", "u;q = p;(id (+) u) => u;q+ = p+",
        {"u": _V(T, "n", "m"), "q": _V(G, "m", "k+m"), "p": _V(G, "n", "k+n")},
        lambda u, q, p, **_: (Comp(u, Dagger(q)), Dagger(p)), dims=("n", "k", "m"),
        premises=lambda u, q, p, k, **_: [(Comp(u, q), Comp(p, C.oplus(Id(k), u)))],
        templates=(_uni_inl, _uni_codiag, _uni_id))

    # while loops over decisions built from tests
    law("dw-fix", "while-dec", "while d p = ifd d (p; while d p) id",
        {"b": _V(B, "n"), "p": _V(G, "n")},
        lambda b, p, n: (C.while_dec(_dia(b), p),
                         C.ite_dec(_dia(b), Comp(p, C.while_dec(_dia(b), p)), Id(n))),
        dims=("n",))
    law("dw-or", "while-dec", "while (d or e) p = while d p; while e (p; while d p)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, **_: (C.while_dec(C.dor(_dia(b), _dia(c)), p),
                              Comp(C.while_dec(_dia(b), p),
                                   C.while_dec(_dia(c), Comp(p, C.while_dec(_dia(b), p))))),
        dims=("n",))
    law("dw-and", "while-dec", "while (d and (e or tt)) p = while d (ifd e p p)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, n: (C.while_dec(C.dand(_dia(b), C.dor(_dia(c), C.dtrue(n))), p),
                            C.while_dec(_dia(b), C.ite_dec(_dia(c), p, p))),
        dims=("n",))
    law("dw-uni", "while-dec",
        "u; ifd d (p;tt) ff = ifd e (q;u;tt) (v;ff) => u; while d p = while e q; v",
        {"u": _V(T, "n", "m"), "v": _V(T, "n", "m"), "b": _V(B, "m"), "c": _V(B, "n"),
         "p": _V(G, "m"), "q": _V(G, "n")},
        _dw_uni, dims=("n", "m"), premises=_dw_uni_premise,
        templates=(_loop_uni_inl, _loop_uni_swap, _loop_uni_id))

    # while loops over tests
    law("tw-fix", "while-test", "while b p = if b (p; while b p) id",
        {"b": _V(B, "n"), "p": _V(G, "n")},
        lambda b, p, n: (C.while_test(b, p), C.ite_test(b, Comp(p, C.while_test(b, p)), Id(n))),
        dims=("n",))
    law("tw-or", "while-test", "while (b or c) p = while b p; while c (p; while b p)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, **_: (C.while_test(Plus(b, c), p),
                              Comp(C.while_test(b, p), C.while_test(c, Comp(p, C.while_test(b, p))))),
        dims=("n",))
    law("tw-and", "while-test", "while (b and (c or top)) p = while b (if c p p)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, n: (C.while_test(Comp(b, Plus(c, Id(n))), p),
                            C.while_test(b, C.ite_test(c, p, p))),
        dims=("n",))
    law("tw-uni", "while-test",
        "u;~b = ~c;v, u;b;p = c;q;u => u; while b p = while c q; v",
        {"u": _V(T, "n", "m"), "v": _V(T, "n", "m"), "b": _V(B, "m"), "c": _V(B, "n"),
         "p": _V(G, "m"), "q": _V(G, "n")},
        lambda u, v, b, c, p, q, **_: (Comp(u, C.while_test(b, p)), Comp(C.while_test(c, q), v)),
        dims=("n", "m"),
        premises=lambda u, v, b, c, p, q, **_: [
            (Comp(u, _neg(b)), Comp(_neg(c), v)),
            (Comp(Comp(u, b), p), Comp(Comp(c, q), u))],
        templates=(_loop_uni_inl, _loop_uni_swap, _loop_uni_id))

    # identities derivable for test-guarded loops
    law("while-exit-guard", "while-eqs", "~b; while (b and c) p = ~b",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, **_: (Comp(_neg(b), C.while_test(Comp(b, c), p)), _neg(b)), dims=("n",))
    law("while-post-test", "while-eqs", "while (b or c) p = while (b or c) p; ~b",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, **_: (C.while_test(Plus(b, c), p),
                              Comp(C.while_test(Plus(b, c), p), _neg(b))), dims=("n",))
    law("while-test-in-body", "while-eqs", "while (b and c) p = while (b and c) (b;p)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n")},
        lambda b, c, p, **_: (C.while_test(Comp(b, c), p),
                              C.while_test(Comp(b, c), Comp(b, p))), dims=("n",))
    law("while-split", "while-eqs",
        "while b (if c p q) = while (b and c) p; while b (q; while (b and c) p)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "p": _V(G, "n"), "q": _V(G, "n")},
        lambda b, c, p, q, **_: (C.while_test(b, C.ite_test(c, p, q)),
                                 Comp(C.while_test(Comp(b, c), p),
                                      C.while_test(b, Comp(q, C.while_test(Comp(b, c), p))))),
        dims=("n",))

    # tests and decisions
    law("td-retract", "tests-dec", "(dia b)? = b", {"b": _V(B, "n")},
        lambda b, **_: (_query(_dia(b)), b), dims=("n",))
    law("td-linear-zero", "tests-dec", "dia b; 0 = 0", {"b": _V(B, "n")},
        lambda b, n, k: (Comp(_dia(b), Zero(2 * n, k)), Zero(n, k)), dims=("n", "k"))
    law("td-linear-plus", "tests-dec", "dia b; (p+q) = dia b;p + dia b;q",
        {"b": _V(B, "n"), "p": _V(G, "n+n", "k"), "q": _V(G, "n+n", "k")},
        lambda b, p, q, **_: (Comp(_dia(b), Plus(p, q)), Plus(Comp(_dia(b), p), Comp(_dia(b), q))),
        dims=("n", "k"))
    law("td-codiag", "tests-dec", "dia b; [id,id] = id", {"b": _V(B, "n")},
        lambda b, n: (Comp(_dia(b), C.codiag(n)), Id(n)), dims=("n",))
    law("td-and-idem", "tests-dec", "d = d and d", {"b": _V(B, "n")},
        lambda b, **_: (_dia(b), C.dand(_dia(b), _dia(b))), dims=("n",))
    law("td-or-idem", "tests-dec", "d = d or d", {"b": _V(B, "n")},
        lambda b, **_: (_dia(b), C.dor(_dia(b), _dia(b))), dims=("n",))
    law("td-or", "tests-dec", "(e or d)? = e? + d?", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (_query(C.dor(_dia(c), _dia(b))),
                           Plus(_query(_dia(c)), _query(_dia(b)))), dims=("n",))
    law("td-and", "tests-dec", "(e and d)? = e?;d?", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (_query(C.dand(_dia(c), _dia(b))),
                           Comp(_query(_dia(c)), _query(_dia(b)))), dims=("n",))
    law("td-neg", "tests-dec", "(~d)? = ~(d?)", {"b": _V(B, "n")},
        lambda b, **_: (_query(C.dneg(_dia(b))), _neg(b)), dims=("n",))

    law("bool-and-comm", "tests-bool", "b;c = c;b", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (Comp(b, c), Comp(c, b)), dims=("n",))
    law("bool-and-assoc", "tests-bool", "(b;c);e = b;(c;e)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "e": _V(B, "n")},
        lambda b, c, e, **_: (Comp(Comp(b, c), e), Comp(b, Comp(c, e))), dims=("n",))
    law("bool-and-idem", "tests-bool", "b;b = b", {"b": _V(B, "n")},
        lambda b, **_: (Comp(b, b), b), dims=("n",))
    law("bool-or-comm", "tests-bool", "b + c = c + b", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (Plus(b, c), Plus(c, b)), dims=("n",))
    law("bool-absorb-and", "tests-bool", "b;(b+c) = b", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (Comp(b, Plus(b, c)), b), dims=("n",))
    law("bool-absorb-or", "tests-bool", "b + b;c = b", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (Plus(b, Comp(b, c)), b), dims=("n",))
    law("bool-dist-and", "tests-bool", "b;(c+e) = b;c + b;e",
        {"b": _V(B, "n"), "c": _V(B, "n"), "e": _V(B, "n")},
        lambda b, c, e, **_: (Comp(b, Plus(c, e)), Plus(Comp(b, c), Comp(b, e))), dims=("n",))
    law("bool-dist-or", "tests-bool", "b + c;e = (b+c);(b+e)",
        {"b": _V(B, "n"), "c": _V(B, "n"), "e": _V(B, "n")},
        lambda b, c, e, **_: (Plus(b, Comp(c, e)), Comp(Plus(b, c), Plus(b, e))), dims=("n",))
    law("bool-contradiction", "tests-bool", "b;~b = 0", {"b": _V(B, "n")},
        lambda b, n: (Comp(b, _neg(b)), Zero(n, n)), dims=("n",))
    law("bool-excluded-middle", "tests-bool", "b + ~b = id", {"b": _V(B, "n")},
        lambda b, n: (Plus(b, _neg(b)), Id(n)), dims=("n",))
    law("bool-double-negation", "tests-bool", "~~b = b", {"b": _V(B, "n")},
        lambda b, **_: (_neg(_neg(b)), b), dims=("n",))
    law("bool-de-morgan", "tests-bool", "~(b;c) = ~b + ~c", {"b": _V(B, "n"), "c": _V(B, "n")},
        lambda b, c, **_: (_neg(Comp(b, c)), Plus(_neg(b), _neg(c))), dims=("n",))
    law("bool-linear-zero", "tests-bool", "b;0 = 0", {"b": _V(B, "n")},
        lambda b, n, k: (Comp(b, Zero(n, k)), Zero(n, k)), dims=("n", "k"))

    law("dec-neg-involution", "decisions", "~~d = d", {"d": _V(G, "n", "n+n")},
        lambda d, **_: (C.dneg(C.dneg(d)), d), dims=("n",))
    law("dec-or-true", "decisions", "tt or d = tt", {"d": _V(G, "n", "n+n")},
        lambda d, n: (C.dor(C.dtrue(n), d), C.dtrue(n)), dims=("n",))
    law("dec-and-false", "decisions", "ff and d = ff", {"d": _V(G, "n", "n+n")},
        lambda d, n: (C.dand(C.dfalse(n), d), C.dfalse(n)), dims=("n",))
    law("if-dec-as-join", "decisions", "ifd (dia b) p q = b;p + ~b;q",
        {"b": _V(B, "n"), "p": _V(G, "n", "k"), "q": _V(G, "n", "k")},
        lambda b, p, q, **_: (C.ite_dec(_dia(b), p, q), C.ite_test(b, p, q)), dims=("n", "k"))

    # translations between star, dagger and while
    law("tr-star-dagger", "translations", "p* = (inl + p;inr)+", {"p": _V(G, "n")},
        lambda p, **_: (Star(p), C.translate("star->dagger", Star(p))), dims=("n",))
    law("tr-dagger-while", "translations", "p+ = inr; whiled (inl (+) inr) [inl,p]; [id, delta]",
        {"p": _V(G, "n", "k+n")},
        lambda p, **_: (Dagger(p), C.translate("dagger->while", Dagger(p))), dims=("n", "k"))
    law("tr-while-dagger", "translations", "while b p = (dia b; [inl, p;inr])+",
        {"b": _V(B, "n"), "p": _V(G, "n")},
        lambda b, p, **_: (WhileTest(b, p), C.translate("while->dagger", WhileTest(b, p))),
        dims=("n",))
    law("tr-star-while-star", "translations", "star -> while -> star round trip", {"p": _V(G, "n")},
        lambda p, **_: (Star(p), _tr_star_while_star(p)), dims=("n",))
    law("tr-while-star-while", "translations", "while -> star -> while round trip",
        {"b": _V(B, "n"), "p": _V(G, "n")},
        lambda b, p, **_: (WhileTest(b, p), _tr_while_star_while(b, p)), dims=("n",))
    law("tr-while-dagger-while", "translations", "while -> dagger -> while round trip",
        {"b": _V(B, "n"), "p": _V(G, "n")},
        lambda b, p, **_: (WhileTest(b, p), _tr_while_dagger_while(b, p)), dims=("n",))
    law("tr-dagger-while-dagger", "translations", "dagger -> while -> dagger round trip",
        {"p": _V(G, "n", "k+n")},
        lambda p, **_: (Dagger(p), _tr_dagger_while_dagger(p)), dims=("n", "k"))

    # the fragment without tests and operations: a may-diverge Kleene algebra
    mdka = Signature(actions=("u", "v"))
    one = dict(dims=("n",), fixed_dims={"n": 1}, sig=mdka)
    law("mdka-plus-assoc", "mdka", "(x+y)+z = x+(y+z)",
        {"x": _V(T, "n"), "y": _V(T, "n"), "z": _V(T, "n")},
        lambda x, y, z, **_: (Plus(Plus(x, y), z), Plus(x, Plus(y, z))), **one)
    law("mdka-plus-comm", "mdka", "x+y = y+x", {"x": _V(T, "n"), "y": _V(T, "n")},
        lambda x, y, **_: (Plus(x, y), Plus(y, x)), **one)
    law("mdka-plus-idem", "mdka", "x+x = x", {"x": _V(T, "n")},
        lambda x, **_: (Plus(x, x), x), **one)
    law("mdka-plus-zero", "mdka", "x+0 = x", {"x": _V(T, "n")},
        lambda x, n: (Plus(x, Zero(n, n)), x), **one)
    law("mdka-mul-assoc", "mdka", "(x;y);z = x;(y;z)",
        {"x": _V(T, "n"), "y": _V(T, "n"), "z": _V(T, "n")},
        lambda x, y, z, **_: (Comp(Comp(x, y), z), Comp(x, Comp(y, z))), **one)
    law("mdka-mul-one", "mdka", "1;x = x = x;1", {"x": _V(T, "n")},
        lambda x, n: (Comp(Comp(Id(n), x), Id(n)), x), **one)
    law("mdka-mul-zero", "mdka", "0;x = 0 = x;0", {"x": _V(T, "n")},
        lambda x, n: (Plus(Comp(Zero(n, n), x), Comp(x, Zero(n, n))), Zero(n, n)), **one)
    law("mdka-dist-left", "mdka", "x;(y+z) = x;y + x;z",
        {"x": _V(T, "n"), "y": _V(T, "n"), "z": _V(T, "n")},
        lambda x, y, z, **_: (Comp(x, Plus(y, z)), Plus(Comp(x, y), Comp(x, z))), **one)
    law("mdka-dist-right", "mdka", "(x+y);z = x;z + y;z",
        {"x": _V(T, "n"), "y": _V(T, "n"), "z": _V(T, "n")},
        lambda x, y, z, **_: (Comp(Plus(x, y), z), Plus(Comp(x, z), Comp(y, z))), **one)
    law("mdka-star-unfold-left", "mdka", "x* = 1 + x;x*", {"x": _V(T, "n")},
        lambda x, n: (Star(x), Plus(Id(n), Comp(x, Star(x)))), **one)
    law("mdka-star-unfold-right", "mdka", "x* = 1 + x*;x", {"x": _V(T, "n")},
        lambda x, n: (Star(x), Plus(Id(n), Comp(Star(x), x))), **one)

    # laws that must fail
    law("star-idempotent", "invalid", "id* = id", {},
        lambda n: (Star(Id(n)), Id(n)), dims=("n",), fixed_dims={"n": 1}, valid=False, trials=50)
    law("star-of-star", "invalid", "p** = p*", {"p": _V(G, "n")},
        lambda p, **_: (Star(Star(p)), Star(p)), dims=("n",), valid=False, trials=50)
    law("left-distributivity-general", "invalid", "p;(q+r) = p;q + p;r",
        {"p": _V(G, "n", "m", needs_op=True), "q": _V(G, "m", "k"), "r": _V(G, "m", "k")},
        lambda p, q, r, **_: (Comp(p, Plus(q, r)), Plus(Comp(p, q), Comp(p, r))),
        dims=("n", "m", "k"), valid=False, trials=50)
    law("right-zero-general", "invalid", "p;0 = 0", {"p": _V(G, "n", "m", needs_op=True)},
        lambda p, n, m, k: (Comp(p, Zero(m, k)), Zero(n, k)),
        dims=("n", "m", "k"), valid=False, trials=50)
    return laws


def law_named(name: str) -> Law:
    for law in catalog():
        if law.name == name:
            return law
    raise KeyError(name)
