"""Signatures, typed terms, classification, complement and printing."""
from __future__ import annotations

import re
from dataclasses import dataclass, fields
from enum import Enum
from typing import Optional

from .errors import DuplicateName, NotATest, TypeMismatch, ZeroArity
from .weights import ATOM_CAP, atom_label, enumerate_atoms


# -- signatures ----------------------------------------------------------------

@dataclass(frozen=True)
class Signature:
    actions: tuple = ()
    tests: tuple = ()
    ops: tuple = ()  # ((name, arity), ...)
    cap: int = ATOM_CAP

    def __post_init__(self):
        seen = set()
        for name in list(self.actions) + list(self.tests) + [n for n, _ in self.ops]:
            if name in seen:
                raise DuplicateName(f"symbol {name!r} declared twice")
            seen.add(name)
        for name, arity in self.ops:
            if arity < 1:
                raise ZeroArity(f"operation {name!r} has arity {arity}; arities must be positive")
        enumerate_atoms(self.tests, self.cap)

    @classmethod
    def default(cls):
        return cls(actions=("u", "v"), tests=("t",), ops=(("a", 1), ("f", 2)))

    @property
    def arity(self):
        return dict(self.ops)

    @property
    def natoms(self):
        return 1 << len(self.tests)

    @property
    def atoms(self):
        return list(range(self.natoms))

    def test_index(self, name):
        return self.tests.index(name)

    def atom_label(self, atom):
        return atom_label(atom, self.tests)

    def kind_of(self, name):
        if name in self.actions:
            return "action"
        if name in self.tests:
            return "test"
        if name in self.arity:
            return "op"
        return None

    def render(self):
        parts = []
        if self.actions:
            parts.append("actions " + ", ".join(self.actions))
        if self.tests:
            parts.append("tests " + ", ".join(self.tests))
        if self.ops:
            parts.append("ops " + ", ".join(f"{n}:{a}" for n, a in self.ops))
        return "; ".join(parts)


_DECL = re.compile(r"^\s*(?:sig\s+)?(actions|tests|ops)\b(.*)$", re.S)


def load_signature(decls, cap: int = ATOM_CAP) -> Signature:
    """Build a signature from declaration text or ``(kind, items)`` pairs.

    Text form: ``"actions u, v; tests t; ops f:2, a:1"`` (a leading ``sig``
    on each declaration is allowed).
    """
    if isinstance(decls, str):
        pairs = []
        for chunk in decls.split(";"):
            if not chunk.strip():
                continue
            m = _DECL.match(chunk)
            if not m:
                raise ValueError(f"bad signature declaration: {chunk.strip()!r}")
            items = [x.strip() for x in m.group(2).split(",") if x.strip()]
            pairs.append((m.group(1), items))
        decls = pairs
    actions, tests, ops = [], [], []
    for kind, items in decls:
        for item in items:
            if kind == "actions":
                actions.append(item)
            elif kind == "tests":
                tests.append(item)
            elif kind == "ops":
                if isinstance(item, tuple):
                    name, arity = item
                else:
                    name, _, ar = item.partition(":")
                    name = name.strip()
                    try:
                        arity = int(ar)
                    except ValueError:
                        raise ValueError(f"bad arity in {item!r}") from None
                ops.append((name, arity))
            else:
                raise ValueError(f"unknown declaration kind {kind!r}")
    return Signature(tuple(actions), tuple(tests), tuple(ops), cap)


@dataclass(frozen=True)
class MorphType:
    dom: int
    cod: int

    def __post_init__(self):
        if self.dom < 1 or self.cod < 1:
            raise TypeMismatch(f"objects must be positive, got {self.dom} -> {self.cod}")

    def __str__(self):
        return f"{self.dom} -> {self.cod}"


class TermClass(Enum):
    GENERAL = "general"
    TAME = "tame"
    TEST = "test"


# -- terms ---------------------------------------------------------------------

class Term:
    """Base class of the term AST.  ``+`` is choice and ``>>`` composition."""

    __slots__ = ()

    def __add__(self, other):
        return Plus(self, other)

    def __rshift__(self, other):
        return Comp(self, other)

    def star(self):
        return Star(self)

    def children(self):
        return tuple(getattr(self, f.name) for f in fields(self)
                     if isinstance(getattr(self, f.name), Term))

    def __str__(self):
        return show(self)


def _node(cls):
    cls = dataclass(frozen=True)(cls)
    cls.__hash__ = _cached_hash(cls.__hash__)
    return cls


def _cached_hash(h):
    def __hash__(self):
        try:
            return self.__dict__["_h"]
        except KeyError:
            v = h(self)
            object.__setattr__(self, "_h", v)
            return v
    return __hash__


@_node
class Gen(Term):
    name: str
    arity: int


@_node
class Act(Term):
    name: str


@_node
class Test(Term):
    name: str


@_node
class NegTest(Term):
    name: str


@_node
class Id(Term):
    n: Optional[int] = None


@_node
class Zero(Term):
    n: Optional[int] = None
    k: Optional[int] = None


@_node
class Plus(Term):
    left: Term
    right: Term


@_node
class Comp(Term):
    left: Term
    right: Term


@_node
class Cotuple(Term):
    left: Term
    right: Term


@_node
class InjL(Term):
    n: Optional[int] = None
    m: Optional[int] = None


@_node
class InjR(Term):
    n: Optional[int] = None
    m: Optional[int] = None


@_node
class Star(Term):
    body: Term


# derived forms

@_node
class Top(Term):
    n: Optional[int] = None


@_node
class Bot(Term):
    n: Optional[int] = None


@_node
class Not(Term):
    body: Term


@_node
class And(Term):
    left: Term
    right: Term


@_node
class Or(Term):
    left: Term
    right: Term


@_node
class IfTest(Term):
    cond: Term
    then: Term
    orelse: Term


@_node
class WhileTest(Term):
    cond: Term
    body: Term


@_node
class IfDec(Term):
    cond: Term
    then: Term
    orelse: Term


@_node
class WhileDec(Term):
    cond: Term
    body: Term


@_node
class Dagger(Term):
    body: Term


@_node
class Diamond(Term):
    body: Term


@_node
class Query(Term):
    body: Term


CORE = (Gen, Act, Test, NegTest, Id, Zero, Plus, Comp, Cotuple, InjL, InjR, Star)
DERIVED = (Top, Bot, Not, And, Or, IfTest, WhileTest, IfDec, WhileDec, Dagger, Diamond, Query)


def is_core(t: Term) -> bool:
    if not isinstance(t, CORE):
        return False
    return all(is_core(c) for c in t.children())


def size(t: Term) -> int:
    return 1 + sum(size(c) for c in t.children())


def height(t: Term) -> int:
    return 1 + max((height(c) for c in t.children()), default=0)


def symbols(t: Term, kind) -> set:
    out = set()
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, kind):
            out.add(x.name)
        stack.extend(x.children())
    return out


def cotuple_of(terms):
    """Right-nested cotuple of one or more terms."""
    terms = list(terms)
    out = terms[-1]
    for t in reversed(terms[:-1]):
        out = Cotuple(t, out)
    return out


# -- typing --------------------------------------------------------------------

def type_of(t: Term, sig: Signature | None = None) -> MorphType:
    d, c = _ty(t, sig)
    return MorphType(d, c)


def _need(cond, msg):
    if not cond:
        raise TypeMismatch(msg)


def _square(t, sig, what):
    d, c = _ty(t, sig)
    _need(d == c, f"{what} needs an endomorphism, got {d} -> {c} for {show(t)}")
    return d


def _ty(t, sig):
    if isinstance(t, Gen):
        if sig is not None:
            _need(sig.arity.get(t.name) == t.arity, f"unknown or mis-typed operation {t.name}")
        return 1, t.arity
    if isinstance(t, (Act, Test, NegTest)):
        if sig is not None:
            want = "action" if isinstance(t, Act) else "test"
            _need(sig.kind_of(t.name) == want, f"{t.name} is not a declared {want}")
        return 1, 1
    if isinstance(t, (Id, Top, Bot)):
        _need(t.n is not None and t.n >= 1, f"{show(t)} has no valid dimension")
        return t.n, t.n
    if isinstance(t, Zero):
        _need(t.n is not None and t.k is not None and t.n >= 1 and t.k >= 1,
              f"{show(t)} has no valid dimensions")
        return t.n, t.k
    if isinstance(t, InjL):
        _need(t.n is not None and t.m is not None and t.n >= 1 and t.m >= 1,
              f"{show(t)} has no valid dimensions")
        return t.n, t.n + t.m
    if isinstance(t, InjR):
        _need(t.n is not None and t.m is not None and t.n >= 1 and t.m >= 1,
              f"{show(t)} has no valid dimensions")
        return t.m, t.n + t.m
    if isinstance(t, (Plus, Or)):
        a, b = _ty(t.left, sig), _ty(t.right, sig)
        _need(a == b, f"choice between {a[0]} -> {a[1]} and {b[0]} -> {b[1]}")
        if isinstance(t, Or):
            _need(a[0] == a[1], "test connective needs endomorphisms")
        return a
    if isinstance(t, (Comp, And)):
        a, b = _ty(t.left, sig), _ty(t.right, sig)
        _need(a[1] == b[0], f"composition of {a[0]} -> {a[1]} with {b[0]} -> {b[1]}")
        if isinstance(t, And):
            _need(a[0] == a[1] == b[1], "test connective needs endomorphisms")
        return a[0], b[1]
    if isinstance(t, Cotuple):
        a, b = _ty(t.left, sig), _ty(t.right, sig)
        _need(a[1] == b[1], f"cotuple of {a[0]} -> {a[1]} and {b[0]} -> {b[1]}")
        return a[0] + b[0], a[1]
    if isinstance(t, Star):
        n = _square(t.body, sig, "star")
        return n, n
    if isinstance(t, Not):
        n = _square(t.body, sig, "negation")
        return n, n
    if isinstance(t, IfTest):
        n = _square(t.cond, sig, "if-test condition")
        p, q = _ty(t.then, sig), _ty(t.orelse, sig)
        _need(p == q and p[0] == n, f"if branches {p} / {q} against condition on {n}")
        return p
    if isinstance(t, WhileTest):
        n = _square(t.cond, sig, "while condition")
        m = _square(t.body, sig, "while body")
        _need(n == m, f"while condition on {n} with body on {m}")
        return n, n
    if isinstance(t, (IfDec, WhileDec)):
        d, c = _ty(t.cond, sig)
        _need(c == 2 * d, f"decision must have type n -> n+n, got {d} -> {c}")
        if isinstance(t, IfDec):
            p, q = _ty(t.then, sig), _ty(t.orelse, sig)
            _need(p == q and p[0] == d, f"if branches {p} / {q} against decision on {d}")
            return p
        m = _square(t.body, sig, "while body")
        _need(m == d, f"while decision on {d} with body on {m}")
        return d, d
    if isinstance(t, Dagger):
        d, c = _ty(t.body, sig)
        _need(c > d, f"dagger needs n -> k+n, got {d} -> {c}")
        return d, c - d
    if isinstance(t, Diamond):
        n = _square(t.body, sig, "diamond")
        return n, 2 * n
    if isinstance(t, Query):
        d, c = _ty(t.body, sig)
        _need(c == 2 * d, f"decision must have type n -> n+n, got {d} -> {c}")
        return d, d
    raise TypeError(f"not a term: {t!r}")


# -- inference of omitted dimensions --------------------------------------------

class _Solver:
    def __init__(self):
        self.parent = []
        self.value = []
        self.sums = []

    def var(self, value=None):
        self.parent.append(len(self.parent))
        self.value.append(value)
        return len(self.parent) - 1

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def get(self, v):
        return self.value[self.find(v)]

    def set(self, v, x, why):
        r = self.find(v)
        if self.value[r] is None:
            if x < 1:
                raise TypeMismatch(f"{why}: dimension {x} is not positive")
            self.value[r] = x
            return True
        if self.value[r] != x:
            raise TypeMismatch(f"{why}: {self.value[r]} vs {x}")
        return False

    def eq(self, a, b, why="type mismatch"):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        va, vb = self.value[ra], self.value[rb]
        if va is not None and vb is not None and va != vb:
            raise TypeMismatch(f"{why}: {va} vs {vb}")
        self.parent[ra] = rb
        if vb is None:
            self.value[rb] = va

    def propagate(self):
        changed = True
        while changed:
            changed = False
            for a, b, c, why in self.sums:
                va, vb, vc = self.get(a), self.get(b), self.get(c)
                if vb is not None and vc is not None:
                    changed |= self.set(a, vb + vc, why)
                elif va is not None and vb is not None:
                    changed |= self.set(c, va - vb, why)
                elif va is not None and vc is not None:
                    changed |= self.set(b, va - vc, why)

    def solve(self):
        self.propagate()
        for v in range(len(self.parent)):
            if self.get(v) is None:
                self.set(v, 1, "default")
                self.propagate()


def infer_types(t: Term, expected: MorphType | None = None, sig: Signature | None = None) -> Term:
    """Fill in omitted dimensions of ``id``, ``0``, ``inl``, ``inr``, ``top``
    and ``bot`` by unification; unconstrained dimensions default to 1."""
    s = _Solver()
    slots = []

    def fresh(x):
        return s.var(x)

    def walk(t):
        if isinstance(t, Gen):
            return fresh(1), fresh(t.arity)
        if isinstance(t, (Act, Test, NegTest)):
            return fresh(1), fresh(1)
        if isinstance(t, (Id, Top, Bot)):
            v = fresh(t.n)
            slots.append((v,))
            return v, v
        if isinstance(t, Zero):
            a, b = fresh(t.n), fresh(t.k)
            slots.append((a, b))
            return a, b
        if isinstance(t, (InjL, InjR)):
            a, b, w = fresh(t.n), fresh(t.m), fresh(None)
            s.sums.append((w, a, b, f"injection {show(t)}"))
            slots.append((a, b))
            return (a if isinstance(t, InjL) else b), w
        if isinstance(t, (Plus, Or)):
            (a, b), (c, d) = walk(t.left), walk(t.right)
            s.eq(a, c, "choice domains")
            s.eq(b, d, "choice codomains")
            if isinstance(t, Or):
                s.eq(a, b, "test connective")
            return a, b
        if isinstance(t, (Comp, And)):
            (a, b), (c, d) = walk(t.left), walk(t.right)
            s.eq(b, c, "composition")
            if isinstance(t, And):
                s.eq(a, b, "test connective")
                s.eq(c, d, "test connective")
            return a, d
        if isinstance(t, Cotuple):
            (a, b), (c, d) = walk(t.left), walk(t.right)
            s.eq(b, d, "cotuple codomains")
            w = fresh(None)
            s.sums.append((w, a, c, "cotuple domain"))
            return w, b
        if isinstance(t, (Star, Not)):
            a, b = walk(t.body)
            s.eq(a, b, "endomorphism required")
            return a, a
        if isinstance(t, IfTest):
            (a, b), (c, d), (e, f) = walk(t.cond), walk(t.then), walk(t.orelse)
            s.eq(a, b, "if condition")
            s.eq(a, c, "if branches")
            s.eq(c, e, "if branches")
            s.eq(d, f, "if branches")
            return c, d
        if isinstance(t, WhileTest):
            (a, b), (c, d) = walk(t.cond), walk(t.body)
            for x in (b, c, d):
                s.eq(a, x, "while")
            return a, a
        if isinstance(t, (IfDec, WhileDec, Query)):
            a, b = walk(t.cond if not isinstance(t, Query) else t.body)
            s.sums.append((b, a, a, "decision type"))
            if isinstance(t, Query):
                return a, a
            if isinstance(t, WhileDec):
                c, d = walk(t.body)
                s.eq(a, c, "while")
                s.eq(a, d, "while")
                return a, a
            (c, d), (e, f) = walk(t.then), walk(t.orelse)
            s.eq(a, c, "if branches")
            s.eq(c, e, "if branches")
            s.eq(d, f, "if branches")
            return c, d
        if isinstance(t, Dagger):
            a, b = walk(t.body)
            k = fresh(None)
            s.sums.append((b, k, a, "dagger type"))
            return a, k
        if isinstance(t, Diamond):
            a, b = walk(t.body)
            s.eq(a, b, "diamond")
            w = fresh(None)
            s.sums.append((w, a, a, "diamond"))
            return a, w
        raise TypeError(f"not a term: {t!r}")

    d, c = walk(t)
    if expected is not None:
        s.set(d, expected.dom, "declared domain")
        s.set(c, expected.cod, "declared codomain")
    s.solve()
    it = iter(slots)

    def rebuild(t):
        if isinstance(t, (Id, Top, Bot)):
            (v,) = next(it)
            return type(t)(s.get(v))
        if isinstance(t, (Zero, InjL, InjR)):
            a, b = next(it)
            return type(t)(s.get(a), s.get(b))
        if isinstance(t, (Gen, Act, Test, NegTest)):
            return t
        return type(t)(*[rebuild(getattr(t, f.name)) for f in fields(t)])

    out = rebuild(t)
    ty = type_of(out, sig)
    if expected is not None and ty != expected:
        raise TypeMismatch(f"declared {expected}, inferred {ty}")
    return out


# -- classification and complement ------------------------------------------------

def _left_part(x, n, m):
    if isinstance(x, InjL):
        return x.n == n and x.m == m
    if isinstance(x, Zero):
        return x.n == n and x.k == n + m
    if isinstance(x, Comp) and isinstance(x.right, InjL):
        return x.right.n == n and x.right.m == m and _is_test_form(x.left)
    return False


def _right_part(x, n, m):
    if isinstance(x, InjR):
        return x.n == n and x.m == m
    if isinstance(x, Zero):
        return x.n == m and x.k == n + m
    if isinstance(x, Comp) and isinstance(x.right, InjR):
        return x.right.n == n and x.right.m == m and _is_test_form(x.left)
    return False


def _split_of(t):
    """For a diagonal cotuple, the pair (n, m) of its components, else None."""
    if not isinstance(t, Cotuple):
        return None
    try:
        n = type_of(t.left).dom
        m = type_of(t.right).dom
    except TypeMismatch:
        return None
    if _left_part(t.left, n, m) and _right_part(t.right, n, m):
        return n, m
    return None


def _is_test_form(t):
    if isinstance(t, (Test, NegTest, Id)):
        return True
    if isinstance(t, Zero):
        return t.n == t.k
    if isinstance(t, (Plus, Comp)):
        return _is_test_form(t.left) and _is_test_form(t.right)
    if isinstance(t, Cotuple):
        return _split_of(t) is not None
    return False


def is_test_form(t: Term) -> bool:
    return _is_test_form(t)


def classify(t: Term) -> TermClass:
    if symbols(t, Gen):
        return TermClass.GENERAL
    if _is_test_form(t):
        return TermClass.TEST
    return TermClass.TAME


def _neg_left(x, n, m):
    if isinstance(x, InjL):
        return Zero(n, n + m)
    if isinstance(x, Zero):
        return InjL(n, m)
    return Comp(complement(x.left), x.right)


def _neg_right(x, n, m):
    if isinstance(x, InjR):
        return Zero(m, n + m)
    if isinstance(x, Zero):
        return InjR(n, m)
    return Comp(complement(x.left), x.right)


def complement(b: Term) -> Term:
    if isinstance(b, Test):
        return NegTest(b.name)
    if isinstance(b, NegTest):
        return Test(b.name)
    if isinstance(b, Id):
        return Zero(b.n, b.n)
    if isinstance(b, Zero) and b.n == b.k:
        return Id(b.n)
    if isinstance(b, Plus) and _is_test_form(b):
        return Comp(complement(b.left), complement(b.right))
    if isinstance(b, Comp) and _is_test_form(b):
        return Plus(complement(b.left), complement(b.right))
    if isinstance(b, Cotuple):
        split = _split_of(b)
        if split is not None:
            n, m = split
            return Cotuple(_neg_left(b.left, n, m), _neg_right(b.right, n, m))
    raise NotATest(f"{show(b)} is not in test form")


def desugar(t: Term, sig: Signature | None = None) -> Term:
    """Replace derived forms by core constructors; identity on core terms."""
    from . import control

    if isinstance(t, (Gen, Act, Test, NegTest, Id, Zero, InjL, InjR)):
        return t
    if isinstance(t, Plus):
        return Plus(desugar(t.left, sig), desugar(t.right, sig))
    if isinstance(t, Comp):
        return Comp(desugar(t.left, sig), desugar(t.right, sig))
    if isinstance(t, Cotuple):
        return Cotuple(desugar(t.left, sig), desugar(t.right, sig))
    if isinstance(t, Star):
        return Star(desugar(t.body, sig))
    if isinstance(t, Top):
        return Id(t.n)
    if isinstance(t, Bot):
        return Zero(t.n, t.n)
    if isinstance(t, Not):
        return complement(_test_arg(t.body, sig))
    if isinstance(t, And):
        return Comp(_test_arg(t.left, sig), _test_arg(t.right, sig))
    if isinstance(t, Or):
        return Plus(_test_arg(t.left, sig), _test_arg(t.right, sig))
    if isinstance(t, IfTest):
        return control.ite_test(_test_arg(t.cond, sig), desugar(t.then, sig), desugar(t.orelse, sig))
    if isinstance(t, WhileTest):
        return control.while_test(_test_arg(t.cond, sig), desugar(t.body, sig))
    if isinstance(t, IfDec):
        return control.ite_dec(desugar(t.cond, sig), desugar(t.then, sig), desugar(t.orelse, sig))
    if isinstance(t, WhileDec):
        return control.while_dec(desugar(t.cond, sig), desugar(t.body, sig))
    if isinstance(t, Dagger):
        return control.dagger(desugar(t.body, sig))
    if isinstance(t, Diamond):
        return control.test_to_dec(_test_arg(t.body, sig))
    if isinstance(t, Query):
        return control.dec_to_test(desugar(t.body, sig))
    raise TypeError(f"not a term: {t!r}")


def _test_arg(t, sig):
    core = desugar(t, sig)
    if not _is_test_form(core):
        raise NotATest(f"{show(t)} is not a test")
    return core


# -- printing ------------------------------------------------------------------

def _dims(*xs):
    if any(x is None for x in xs):
        return ""
    if len(xs) == 1:
        return f"@{xs[0]}"
    return "@(" + ",".join(str(x) for x in xs) + ")"


def show(t: Term) -> str:
    """Render in the surface grammar; ``parse_term(show(t))`` gives ``t`` back."""
    return _show(t, 0)


def _paren(s, level, need):
    return f"({s})" if level > need else s


def _show(t, level):
    if isinstance(t, (Gen, Act, Test)):
        return t.name
    if isinstance(t, NegTest):
        return _paren("~" + t.name, level, 2)
    if isinstance(t, Id):
        return "id" + _dims(t.n)
    if isinstance(t, Zero):
        return "0" + _dims(t.n, t.k)
    if isinstance(t, InjL):
        return "inl" + _dims(t.n, t.m)
    if isinstance(t, InjR):
        return "inr" + _dims(t.n, t.m)
    if isinstance(t, Top):
        return "top" + _dims(t.n)
    if isinstance(t, Bot):
        return "bot" + _dims(t.n)
    if isinstance(t, Plus):
        return _paren(_show(t.left, 0) + " + " + _show(t.right, 1), level, 0)
    if isinstance(t, Or):
        return _paren(_show(t.left, 0) + " | " + _show(t.right, 1), level, 0)
    if isinstance(t, Comp):
        return _paren(_show(t.left, 1) + " ; " + _show(t.right, 2), level, 1)
    if isinstance(t, And):
        return _paren(_show(t.left, 1) + " & " + _show(t.right, 2), level, 1)
    if isinstance(t, Not):
        return _paren("~" + _show(t.body, 2), level, 2)
    if isinstance(t, Star):
        return _paren(_show(t.body, 3) + "*", level, 3)
    if isinstance(t, Cotuple):
        return "[" + _show(t.left, 0) + ", " + _show(t.right, 0) + "]"
    if isinstance(t, IfTest):
        return f"if {_show(t.cond, 0)} then {_show(t.then, 0)} else {_show(t.orelse, 0)} fi"
    if isinstance(t, IfDec):
        return f"ifd {_show(t.cond, 0)} then {_show(t.then, 0)} else {_show(t.orelse, 0)} fi"
    if isinstance(t, WhileTest):
        return f"while {_show(t.cond, 0)} do {_show(t.body, 0)} od"
    if isinstance(t, WhileDec):
        return f"whiled {_show(t.cond, 0)} do {_show(t.body, 0)} od"
    if isinstance(t, Dagger):
        return f"dagger({_show(t.body, 0)})"
    if isinstance(t, Diamond):
        return f"dia({_show(t.body, 0)})"
    if isinstance(t, Query):
        return f"query({_show(t.body, 0)})"
    raise TypeError(f"not a term: {t!r}")
