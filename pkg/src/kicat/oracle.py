"""Brute-force semantics used to cross-validate the automaton engine.

Two independent views:

* ``expand`` unfolds a compiled morphism through its derivative
  operations up to ``l`` actions per layer and ``d`` nested operation heads.
* ``term_trunc`` and ``support_lang`` evaluate a *term* structurally, never
  touching a machine, and forget weights.

A truncated tree is a frozenset of entries ``(("x", path, i), w)``,
``(("f", path, op, kids), w)`` or ``(("h", path, op), 1)``, where ``path``
is a guarded string and ``"h"`` marks a head below the depth horizon.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotTame, TypeMismatch
from .rattree import Morphism, compile
from .syntax import (
    Act, Comp, Cotuple, Gen, Id, InjL, InjR, NegTest, Plus, Signature, Star, Term,
    Test, Zero, TermClass, classify, height, type_of,
)


# -- expansion of compiled morphisms ---------------------------------------------------

def expand(p: Morphism, l: int, d: int) -> tuple:
    M = p.machine
    memo: dict = {}
    return tuple(_expand_state(M, S, l, d, memo) for S in p.roots)


def _expand_state(M, S, l, d, memo):
    key = (S, d)
    hit = memo.get(key)
    if hit is not None:
        return hit
    sig = M.sig
    entries: dict = {}
    stack = [(S, (), 0)]
    while stack:
        T, path, k = stack.pop()
        out = M.output_of(T)
        for a in range(sig.natoms):
            full = path + (a,)
            for (b, i), w in out.items():
                if b == a:
                    entries[("x", full, i)] = int(w)
            for f, ch, w in M.heads_of(T, a):
                if d == 0:
                    entries[("h", full, f)] = 1
                else:
                    kids = tuple(_expand_state(M, c, l, d - 1, memo) for c in ch)
                    e = ("f", full, f, kids)
                    entries[e] = max(entries.get(e, 0), w)
            if k < l:
                for u in sig.actions:
                    T2 = M.deriv_action(T, a, u)
                    if T2:
                        stack.append((T2, full + (u,), k + 1))
    out = frozenset(entries.items())
    memo[key] = out
    return out


def compare_bounded(p: Morphism, q: Morphism, l: int, d: int) -> bool:
    if p.type != q.type:
        raise TypeMismatch(f"comparing {p.type} with {q.type}")
    return expand(p, l, d) == expand(q, l, d)


def support_tree(tree: frozenset) -> frozenset:
    """Forget weights, recursively."""
    out = set()
    for e, _ in tree:
        if e[0] == "f":
            out.add(("f", e[1], e[2], tuple(support_tree(k) for k in e[3])))
        else:
            out.add(e)
    return frozenset(out)


def has_horizon(tree: frozenset) -> bool:
    for e, _ in tree:
        if e[0] == "h":
            return True
        if e[0] == "f" and any(has_horizon(k) for k in e[3]):
            return True
    return False


def weights_of(tree: frozenset) -> set:
    out = set()
    for e, w in tree:
        out.add(w)
        if e[0] == "f":
            for k in e[3]:
                out |= weights_of(k)
    return out


# -- structural truncated support of terms ------------------------------------------------

def _actions(path):
    return len(path) // 2


class _Trunc:
    def __init__(self, sig: Signature, l: int):
        self.sig = sig
        self.l = l
        self.atoms = list(range(sig.natoms))
        self.tt = lru_cache(maxsize=None)(self._tt)
        self.compose = lru_cache(maxsize=None)(self._compose)

    def units(self, i):
        return frozenset(("x", (a,), i) for a in self.atoms)

    def fuse(self, g, e):
        h = e[1]
        if g[-1] != h[0] or _actions(g) + _actions(h) > self.l:
            return None
        return (e[0], g + h[1:]) + e[2:]

    def _compose(self, E, s, d):
        """Element ``E`` (depth ``d``) followed by the term ``s``."""
        out = set()
        S = None
        for e in E:
            if e[0] == "x":
                if S is None:
                    S = self.tt(s, d)
                for e2 in S[e[2]]:
                    x = self.fuse(e[1], e2)
                    if x is not None:
                        out.add(x)
            elif e[0] == "f":
                out.add(("f", e[1], e[2], tuple(self.compose(k, s, d - 1) for k in e[3])))
            else:
                out.add(e)
        return frozenset(out)

    def _tt(self, t, d):
        sig, atoms = self.sig, self.atoms
        if isinstance(t, Id):
            return tuple(self.units(i) for i in range(t.n))
        if isinstance(t, Zero):
            return (frozenset(),) * t.n
        if isinstance(t, InjL):
            return tuple(self.units(i) for i in range(t.n))
        if isinstance(t, InjR):
            return tuple(self.units(t.n + i) for i in range(t.m))
        if isinstance(t, (Test, NegTest)):
            idx = sig.test_index(t.name)
            want = isinstance(t, Test)
            return (frozenset(("x", (a,), 0) for a in atoms if bool(a >> idx & 1) == want),)
        if isinstance(t, Act):
            if self.l < 1:
                return (frozenset(),)
            return (frozenset(("x", (a, t.name, b), 0) for a in atoms for b in atoms),)
        if isinstance(t, Gen):
            if d == 0:
                return (frozenset(("h", (a,), t.name) for a in atoms),)
            kids = tuple(self.units(j) for j in range(t.arity))
            return (frozenset(("f", (a,), t.name, kids) for a in atoms),)
        if isinstance(t, Plus):
            return tuple(x | y for x, y in zip(self.tt(t.left, d), self.tt(t.right, d)))
        if isinstance(t, Cotuple):
            return self.tt(t.left, d) + self.tt(t.right, d)
        if isinstance(t, Comp):
            return tuple(self.compose(E, t.right, d) for E in self.tt(t.left, d))
        if isinstance(t, Star):
            return self._star(t, d)
        raise TypeMismatch(f"not a core term: {t}")

    def _star(self, t, d):
        P = self.tt(t.body, d)
        n = len(P)
        ident = tuple(self.units(i) for i in range(n))
        fixed = []
        loops = []
        for E in P:
            heads = set()
            exits = []
            for e in E:
                if e[0] == "x":
                    exits.append(e)
                elif e[0] == "f":
                    heads.add(("f", e[1], e[2], tuple(self.compose(k, t, d - 1) for k in e[3])))
                else:
                    heads.add(e)
            fixed.append(frozenset(heads))
            loops.append(exits)
        X = ident
        while True:
            nxt = []
            for i in range(n):
                acc = set(ident[i]) | fixed[i]
                for e in loops[i]:
                    for e2 in X[e[2]]:
                        x = self.fuse(e[1], e2)
                        if x is not None:
                            acc.add(x)
                nxt.append(frozenset(acc))
            nxt = tuple(nxt)
            if nxt == X:
                return X
            X = nxt


def term_trunc(t: Term, sig: Signature, l: int, d: int) -> tuple:
    """Truncated support of a core term, evaluated on the term itself."""
    type_of(t, sig)
    return _Trunc(sig, l).tt(t, d)


# -- guarded-string supports of tame terms -----------------------------------------------

def _fuse_lang(A, B_by_root, maxlen):
    out = set()
    for g, j in A:
        for h, k in B_by_root[j]:
            if g[-1] == h[0] and _actions(g) + _actions(h) <= maxlen:
                out.add((g + h[1:], k))
    return frozenset(out)


def support_lang(t: Term, sig: Signature, maxlen: int) -> tuple:
    """Per input component, the set of ``(guarded string, exit)`` pairs of
    nonzero weight with at most ``maxlen`` actions."""
    if classify(t) == TermClass.GENERAL:
        raise NotTame(f"{t} mentions an operation symbol")
    type_of(t, sig)
    atoms = list(range(sig.natoms))
    memo: dict = {}

    def units(i):
        return frozenset(((a,), i) for a in atoms)

    def go(t):
        hit = memo.get(t)
        if hit is not None:
            return hit
        if isinstance(t, (Id, InjL)):
            r = tuple(units(i) for i in range(t.n))
        elif isinstance(t, InjR):
            r = tuple(units(t.n + i) for i in range(t.m))
        elif isinstance(t, Zero):
            r = (frozenset(),) * t.n
        elif isinstance(t, (Test, NegTest)):
            idx = sig.test_index(t.name)
            want = isinstance(t, Test)
            r = (frozenset(((a,), 0) for a in atoms if bool(a >> idx & 1) == want),)
        elif isinstance(t, Act):
            r = (frozenset(((a, t.name, b), 0) for a in atoms for b in atoms) if maxlen else frozenset(),)
        elif isinstance(t, Plus):
            r = tuple(x | y for x, y in zip(go(t.left), go(t.right)))
        elif isinstance(t, Cotuple):
            r = go(t.left) + go(t.right)
        elif isinstance(t, Comp):
            B = go(t.right)
            r = tuple(_fuse_lang(A, B, maxlen) for A in go(t.left))
        elif isinstance(t, Star):
            P = go(t.body)
            X = tuple(units(i) for i in range(len(P)))
            while True:
                nxt = tuple(units(i) | _fuse_lang(P[i], X, maxlen) for i in range(len(P)))
                if nxt == X:
                    break
                X = nxt
            r = X
        else:
            raise TypeMismatch(f"not a core term: {t}")
        memo[t] = r
        return r

    return go(t)


def engine_support(p: Morphism, maxlen: int) -> tuple:
    """Nonzero-weight strings read off a compiled tame morphism."""
    M = p.machine
    sig = M.sig
    out = []
    for S in p.roots:
        acc = set()
        stack = [(S, ())]
        while stack:
            T, path = stack.pop()
            for a in range(sig.natoms):
                full = path + (a,)
                for (b, i), w in M.output_of(T).items():
                    if b == a and w:
                        acc.add((full, i))
                if _actions(full) < maxlen:
                    for u in sig.actions:
                        T2 = M.deriv_action(T, a, u)
                        if T2:
                            stack.append((T2, full + (u,)))
        out.append(frozenset(acc))
    return tuple(out)


def render_support(lang, sig: Signature) -> list[str]:
    """Sorted lines ``<atom> u <atom> ... -> exit#i``."""
    lines = []
    for g, i in lang:
        parts = [sig.atom_label(x) if k % 2 == 0 else x for k, x in enumerate(g)]
        lines.append((g, i, " ".join(parts) + f" -> exit#{i}"))
    lines.sort(key=lambda r: (len(r[0]), r[2]))
    return [r[2] for r in lines]


# -- cross validation -----------------------------------------------------------------

@dataclass
class CrossConfig:
    l: int = 4
    d: int = 3
    maxlen: int = 5


@dataclass
class Report:
    term: Term
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())


def cross_check(t: Term, sig: Signature, config: CrossConfig | None = None) -> Report:
    config = config or CrossConfig()
    p = compile(t, sig)
    rep = Report(t)
    got = tuple(support_tree(x) for x in expand(p, config.l, config.d))
    rep.checks["expand"] = got == term_trunc(t, sig, config.l, config.d)
    if classify(t) != TermClass.GENERAL:
        rep.checks["support"] = support_lang(t, sig, config.maxlen) == engine_support(p, config.maxlen)
    if not _has_star(t):
        h = height(t)
        full = expand(p, h, h)
        rep.checks["star-free-total"] = (not any(has_horizon(x) for x in full)
                                         and all(weights_of(x) <= {1} for x in full)
                                         and tuple(support_tree(x) for x in full)
                                         == term_trunc(t, sig, h, h))
    return rep


def _has_star(t):
    if isinstance(t, Star):
        return True
    return any(_has_star(c) for c in t.children())
