"""Finite automata presenting rational trees.

A node carries three kinds of summands: guarded steps ``(atom, action) ->
state`` inside the current layer, exits ``(atom, index) -> weight``, and
operation heads ``atom -> (op, children, weight)`` that open new layers.
A state is a finite weighted set of nodes, kept as a sorted tuple of
``(node id, weight)`` pairs; weights are the ints 0, 1, 2 of ``Weight``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ClosureBudgetExceeded, IndexOutOfArity, TypeMismatch
from .syntax import (
    Act, Comp, Cotuple, Gen, Id, InjL, InjR, MorphType, NegTest, Plus, Signature,
    Star, Term, Test, Zero, cotuple_of, type_of,
)
from .weights import Weight, qmat_star

EMPTY: tuple = ()


def canon(d: dict) -> tuple:
    return tuple(sorted(kv for kv in d.items() if kv[1]))


def _mul(a, b):
    return 0 if not a or not b else (a if a >= b else b)


class Node:
    __slots__ = ("gtrans", "exits", "souts")

    def __init__(self, gtrans=None, exits=None, souts=None):
        self.gtrans = gtrans or {}   # (atom, action) -> State
        self.exits = exits or {}     # (atom, index) -> weight
        self.souts = souts or {}     # atom -> tuple of (op, children, weight)

    def __repr__(self):
        return f"Node(g={self.gtrans}, x={self.exits}, s={self.souts})"


class Info:
    """Determinized view of a state."""

    __slots__ = ("g", "x", "s", "g_at", "x_at")

    def __init__(self, g, x, s):
        self.g = g
        self.x = x
        self.s = s
        g_at, x_at = {}, {}
        for (a, u), t in g.items():
            g_at.setdefault(a, []).append((u, t))
        for (a, i), w in x.items():
            x_at.setdefault(a, []).append((i, w))
        self.g_at = g_at
        self.x_at = x_at


class Machine:
    """Append-only arena of nodes over one signature."""

    _count = 0

    def __init__(self, sig: Signature):
        Machine._count += 1
        self.uid = Machine._count
        self.sig = sig
        self.nodes: list[Node] = []
        self._info: dict = {}
        self._units: dict = {}
        self._comp: dict = {}
        self._compiled: dict = {}
        self._imports: dict = {}
        self._pending: list = []

    def __len__(self):
        return len(self.nodes)

    # -- nodes ---------------------------------------------------------------

    def add(self, gtrans=None, exits=None, souts=None) -> int:
        self.nodes.append(Node(gtrans, exits, souts))
        return len(self.nodes) - 1

    def unit(self, i: int) -> int:
        nid = self._units.get(i)
        if nid is None:
            nid = self.add(exits={(a, i): 1 for a in range(self.sig.natoms)})
            self._units[i] = nid
        return nid

    def unit_state(self, i: int) -> tuple:
        return ((self.unit(i), 1),)

    # -- determinized observations -------------------------------------------

    def info(self, S: tuple) -> Info:
        inf = self._info.get(S)
        if inf is not None:
            return inf
        nodes = self.nodes
        if len(S) == 1 and S[0][1] == 1:
            n = nodes[S[0][0]]
            s = {a: _merge_heads(entries) for a, entries in n.souts.items()}
            inf = Info(n.gtrans, n.exits, s)
            self._info[S] = inf
            return inf
        g: dict = {}
        x: dict = {}
        s: dict = {}
        for nid, w in S:
            n = nodes[nid]
            for key, T in n.gtrans.items():
                d = g.get(key)
                if d is None:
                    d = g[key] = {}
                for m, v in T:
                    v = v if v >= w else w
                    if v > d.get(m, 0):
                        d[m] = v
            for key, e in n.exits.items():
                e = e if e >= w else w
                if e > x.get(key, 0):
                    x[key] = e
            for a, entries in n.souts.items():
                lst = s.setdefault(a, [])
                for f, ch, v in entries:
                    lst.append((f, ch, v if v >= w else w))
        g = {k: canon(d) for k, d in g.items()}
        s = {a: _merge_heads(lst) for a, lst in s.items()}
        inf = Info(g, x, s)
        self._info[S] = inf
        return inf

    def deriv_action(self, S, atom, action) -> tuple:
        return self.info(S).g.get((atom, action), EMPTY)

    def deriv_op(self, S, atom, op, k) -> tuple:
        ar = self.sig.arity.get(op)
        if ar is None or not 0 <= k < ar:
            raise IndexOutOfArity(f"child {k} of {op}")
        d: dict = {}
        for f, ch, w in self.info(S).s.get(atom, ()):
            if f != op:
                continue
            for m, v in ch[k]:
                v = _mul(v, w)
                if v > d.get(m, 0):
                    d[m] = v
        return canon(d)

    def output_of(self, S) -> dict:
        return {k: Weight(v) for k, v in self.info(S).x.items()}

    def heads_of(self, S, atom) -> tuple:
        """Operation heads ``(op, children, weight)`` at ``atom``."""
        return self.info(S).s.get(atom, ())

    # -- composition -----------------------------------------------------------

    def comp_state(self, S, key) -> tuple:
        out = []
        memo = self._comp
        for nid, w in S:
            k2 = (nid, key)
            cid = memo.get(k2)
            if cid is None:
                cid = self.add()
                memo[k2] = cid
                self._pending.append((nid, key, cid))
            out.append((cid, w))
        out.sort()
        return tuple(out)

    def drain(self):
        pending = self._pending
        while pending:
            nid, key, cid = pending.pop()
            self._fill_comp(nid, key, cid)

    def _fill_comp(self, nid, key, cid):
        node = self.nodes[nid]
        g: dict = {}
        x: dict = {}
        s: dict = {}
        for k, T in node.gtrans.items():
            g[k] = dict(self.comp_state(T, key))
        for (a, j), e in node.exits.items():
            R = key[j]
            if not R:
                continue
            ri = self.info(R)
            for u, T in ri.g_at.get(a, ()):
                d = g.get((a, u))
                if d is None:
                    d = g[(a, u)] = {}
                for m, v in T:
                    v = v if v >= e else e
                    if v > d.get(m, 0):
                        d[m] = v
            for i, w in ri.x_at.get(a, ()):
                w = w if w >= e else e
                if w > x.get((a, i), 0):
                    x[(a, i)] = w
            for f, ch, w in ri.s.get(a, ()):
                s.setdefault(a, []).append((f, ch, w if w >= e else e))
        for a, entries in node.souts.items():
            lst = s.setdefault(a, [])
            for f, ch, w in entries:
                lst.append((f, tuple(self.comp_state(c, key) for c in ch), w))
        n = self.nodes[cid]
        n.gtrans = {k: canon(d) for k, d in g.items() if d}
        n.exits = x
        n.souts = {a: _merge_heads(lst) for a, lst in s.items() if lst}

    def _is_identity_key(self, key):
        return all(R == self.unit_state(i) for i, R in enumerate(key))

    def compose_roots(self, roots, key):
        if self._is_identity_key(key):
            return tuple(roots)
        out = tuple(self.comp_state(S, key) for S in roots)
        self.drain()
        return out

    # -- star ----------------------------------------------------------------

    def star_roots(self, roots):
        n = len(roots)
        natoms = self.sig.natoms
        infos = [self.info(R) for R in roots]
        slices = []
        for a in range(natoms):
            slices.append([[infos[i].x.get((a, j), 0) for j in range(n)] for i in range(n)])
        stars = [qmat_star(m) for m in slices]
        ident = all(stars[a][i][j] == (1 if i == j else 0)
                    for a in range(natoms) for i in range(n) for j in range(n))
        guards = []
        for inf in infos:
            guards.append(((self.add(gtrans=dict(inf.g), souts=dict(inf.s)), 1),))
        if ident:
            ekey = None
            hroots = guards
        else:
            enodes = []
            for i in range(n):
                ex = {}
                for a in range(natoms):
                    for j in range(n):
                        w = int(stars[a][i][j])
                        if w:
                            ex[(a, j)] = w
                enodes.append(((self.add(exits=ex), 1),))
            ekey = tuple(enodes)
            hroots = self.compose_roots(guards, ekey)
        lnodes = [self.add() for _ in range(n)]
        lkey = tuple(((l, 1),) for l in lnodes)
        for j, l in enumerate(lnodes):
            hi = self.info(hroots[j])
            node = self.nodes[l]
            node.exits = {(a, j): 1 for a in range(natoms)}
            node.gtrans = {k: self.comp_state(T, lkey) for k, T in hi.g.items()}
            node.souts = {a: tuple((f, tuple(self.comp_state(c, lkey) for c in ch), w)
                                   for f, ch, w in entries)
                          for a, entries in hi.s.items()}
        self.drain()
        if ekey is None:
            return lkey
        return self.compose_roots(ekey, lkey)

    # -- import ----------------------------------------------------------------

    def adopt(self, p: "Morphism") -> "Morphism":
        """Return ``p`` re-homed into this machine."""
        if p.machine is self:
            return p
        if p.machine.sig != self.sig:
            raise TypeMismatch("morphisms over different signatures")
        off = self._imports.get(p.machine.uid)
        other = p.machine
        if off is None or off[1] != len(other.nodes):
            base = len(self.nodes)
            for n in other.nodes:
                self.nodes.append(_shift_node(n, base))
            off = (base, len(other.nodes))
            self._imports[other.uid] = off
        base = off[0]
        return Morphism(p.type, tuple(_shift(S, base) for S in p.roots), self)


def _shift(S, base):
    return tuple((nid + base, w) for nid, w in S)


def _shift_node(n, base):
    return Node(
        {k: _shift(T, base) for k, T in n.gtrans.items()},
        dict(n.exits),
        {a: tuple((f, tuple(_shift(c, base) for c in ch), w) for f, ch, w in e)
         for a, e in n.souts.items()},
    )


def _merge_heads(entries):
    if len(entries) <= 1:
        return tuple(entries)
    d: dict = {}
    for f, ch, w in entries:
        k = (f, ch)
        if w > d.get(k, 0):
            d[k] = w
    return tuple(sorted((f, ch, w) for (f, ch), w in d.items()))


@dataclass(frozen=True)
class Morphism:
    type: MorphType
    roots: tuple
    machine: Machine = field(compare=False, repr=False)

    @property
    def dom(self):
        return self.type.dom

    @property
    def cod(self):
        return self.type.cod


# -- compilation -------------------------------------------------------------------

def compile(t: Term, sig: Signature, machine: Optional[Machine] = None) -> Morphism:
    """Compile a core term.  Subterms are memoized per machine."""
    if machine is None:
        machine = Machine(sig)
    elif machine.sig != sig:
        raise TypeMismatch("machine built for another signature")
    type_of(t, sig)
    return _compile(t, machine)


def _compile(t, M):
    hit = M._compiled.get(t)
    if hit is not None:
        return hit
    out = _compile_new(t, M)
    M._compiled[t] = out
    return out


def _compile_new(t, M):
    sig = M.sig
    if isinstance(t, (Test, NegTest)):
        idx = sig.test_index(t.name)
        want = isinstance(t, Test)
        ex = {(a, 0): 1 for a in range(sig.natoms) if bool(a >> idx & 1) == want}
        return Morphism(MorphType(1, 1), (((M.add(exits=ex), 1),),), M)
    if isinstance(t, Act):
        u = M.unit_state(0)
        nid = M.add(gtrans={(a, t.name): u for a in range(sig.natoms)})
        return Morphism(MorphType(1, 1), (((nid, 1),),), M)
    if isinstance(t, Gen):
        ch = tuple(M.unit_state(j) for j in range(t.arity))
        nid = M.add(souts={a: ((t.name, ch, 1),) for a in range(sig.natoms)})
        return Morphism(MorphType(1, t.arity), (((nid, 1),),), M)
    if isinstance(t, Id):
        return Morphism(MorphType(t.n, t.n), tuple(M.unit_state(i) for i in range(t.n)), M)
    if isinstance(t, Zero):
        return Morphism(MorphType(t.n, t.k), (EMPTY,) * t.n, M)
    if isinstance(t, InjL):
        return Morphism(MorphType(t.n, t.n + t.m), tuple(M.unit_state(i) for i in range(t.n)), M)
    if isinstance(t, InjR):
        return Morphism(MorphType(t.m, t.n + t.m),
                        tuple(M.unit_state(t.n + i) for i in range(t.m)), M)
    if isinstance(t, Plus):
        return m_plus(_compile(t.left, M), _compile(t.right, M))
    if isinstance(t, Comp):
        return m_comp(_compile(t.left, M), _compile(t.right, M))
    if isinstance(t, Cotuple):
        return m_cotuple(_compile(t.left, M), _compile(t.right, M))
    if isinstance(t, Star):
        return m_star(_compile(t.body, M))
    raise TypeMismatch(f"not a core term: {t}")


def join_states(*states) -> tuple:
    d: dict = {}
    for S in states:
        for nid, w in S:
            if w > d.get(nid, 0):
                d[nid] = w
    return canon(d)


def scale_state(S, w) -> tuple:
    if not w:
        return EMPTY
    return tuple((nid, v if v >= w else w) for nid, v in S)


def m_plus(p: Morphism, q: Morphism) -> Morphism:
    if p.type != q.type:
        raise TypeMismatch(f"choice between {p.type} and {q.type}")
    q = p.machine.adopt(q)
    return Morphism(p.type, tuple(join_states(a, b) for a, b in zip(p.roots, q.roots)), p.machine)


def m_cotuple(p: Morphism, q: Morphism) -> Morphism:
    if p.cod != q.cod:
        raise TypeMismatch(f"cotuple of {p.type} and {q.type}")
    q = p.machine.adopt(q)
    return Morphism(MorphType(p.dom + q.dom, p.cod), p.roots + q.roots, p.machine)


def m_comp(p: Morphism, q: Morphism) -> Morphism:
    if p.cod != q.dom:
        raise TypeMismatch(f"composition of {p.type} with {q.type}")
    q = p.machine.adopt(q)
    M = p.machine
    return Morphism(MorphType(p.dom, q.cod), M.compose_roots(p.roots, q.roots), M)


def m_star(p: Morphism) -> Morphism:
    if p.dom != p.cod:
        raise TypeMismatch(f"star of non-endomorphism {p.type}")
    return Morphism(p.type, p.machine.star_roots(p.roots), p.machine)


def m_id(M: Machine, n: int) -> Morphism:
    return Morphism(MorphType(n, n), tuple(M.unit_state(i) for i in range(n)), M)


# -- derivative API ------------------------------------------------------------------

def deriv_action(M: Machine, S, atom, action):
    return M.deriv_action(S, atom, action)


def deriv_op(M: Machine, S, atom, op, k):
    return M.deriv_op(S, atom, op, k)


def output_of(M: Machine, S):
    return M.output_of(S)


def closure(p: Morphism, budget: int = 100_000) -> set:
    """Nonempty states reachable from the roots by action and operation
    derivatives (the latter taken componentwise)."""
    M = p.machine
    sig = M.sig
    seen = set()
    todo = [S for S in p.roots if S]
    seen.update(todo)
    while todo:
        S = todo.pop()
        inf = M.info(S)
        succ = list(inf.g.values())
        for a, heads in inf.s.items():
            for f in {h[0] for h in heads}:
                for k in range(sig.arity[f]):
                    succ.append(M.deriv_op(S, a, f, k))
        for T in succ:
            if T and T not in seen:
                seen.add(T)
                if len(seen) > budget:
                    raise ClosureBudgetExceeded(f"closure exceeded {budget} states")
                todo.append(T)
    return seen


def reachable_states(p: Morphism, budget: int = 200_000) -> list:
    """States reachable by action steps and head children, in BFS order."""
    M = p.machine
    order = []
    seen = set()
    for S in p.roots:
        if S not in seen:
            seen.add(S)
            order.append(S)
    i = 0
    while i < len(order):
        inf = M.info(order[i])
        i += 1
        for k in sorted(inf.g):
            T = inf.g[k]
            if T not in seen:
                seen.add(T)
                order.append(T)
        for a in sorted(inf.s):
            for _, ch, _ in inf.s[a]:
                for T in ch:
                    if T not in seen:
                        seen.add(T)
                        order.append(T)
        if len(order) > budget:
            raise ClosureBudgetExceeded(f"more than {budget} reachable states")
    return order


def reachable_nodes(p: Morphism) -> list:
    M = p.machine
    seen = set()
    order = []
    stack = [nid for S in p.roots for nid, _ in S]
    while stack:
        nid = stack.pop()
        if nid in seen:
            continue
        seen.add(nid)
        order.append(nid)
        n = M.nodes[nid]
        for T in n.gtrans.values():
            stack.extend(m for m, _ in T)
        for entries in n.souts.values():
            for _, ch, _ in entries:
                for c in ch:
                    stack.extend(m for m, _ in c)
    return sorted(order)


def is_tame(p: Morphism) -> bool:
    M = p.machine
    return not any(M.nodes[n].souts for n in reachable_nodes(p))


def is_test(p: Morphism) -> bool:
    if p.dom != p.cod:
        return False
    M = p.machine
    for i, S in enumerate(p.roots):
        inf = M.info(S)
        if inf.g or inf.s:
            return False
        for (a, j), w in inf.x.items():
            if j != i or w > 1:
                return False
    return True


# -- definable form --------------------------------------------------------------------

def _atom_term(sig, atom):
    lits = [Test(t) if atom >> i & 1 else NegTest(t) for i, t in enumerate(sig.tests)]
    if not lits:
        return Id(1)
    out = lits[0]
    for x in lits[1:]:
        out = Comp(out, x)
    return out


def inj_term(j: int, m: int) -> Term:
    """The j-th coproduct injection 1 -> m."""
    if m == 1:
        return Id(1)
    first = Id(1) if j == 0 else InjR(j, 1)
    if j + 1 == m:
        return first
    return Comp(first, InjL(j + 1, m - j - 1)) if j else InjL(1, m - 1)


def _weighted(w, t):
    return Comp(Star(Id(1)), t) if w == 2 else t


def _sum_terms(terms, n, k):
    if not terms:
        return Zero(n, k)
    out = terms[0]
    for x in terms[1:]:
        out = Plus(out, x)
    return out


@dataclass
class DefinableForm:
    m: int
    inj: Morphism
    s: Morphism
    r: Morphism
    basis: list
    inj_term: Term
    s_term: Term
    r_term: Term

    def recompile(self) -> Morphism:
        return m_comp(m_comp(self.inj, m_star(self.s)), self.r)

    def term(self) -> Term:
        return Comp(Comp(self.inj_term, Star(self.s_term)), self.r_term)


def to_definable(p: Morphism) -> DefinableForm:
    """Flat guarded system over the reachable states of ``p``.

    Row i of ``s`` has one step per action derivative and one head per
    operation head (children replaced by basis indices); ``r`` holds the
    exit weights.
    """
    M = p.machine
    sig = M.sig
    n, k = p.dom, p.cod
    basis = list(p.roots)
    index = {}
    for i, S in enumerate(basis):
        index.setdefault(S, i)
    i = 0
    while i < len(basis):
        inf = M.info(basis[i])
        i += 1
        succ = [inf.g[key] for key in sorted(inf.g)]
        for a in sorted(inf.s):
            for _, ch, _ in inf.s[a]:
                succ.extend(ch)
        for T in succ:
            if T not in index:
                index[T] = len(basis)
                basis.append(T)
    m = len(basis)
    sroots, rroots, srows, rrows = [], [], [], []
    for S in basis:
        inf = M.info(S)
        g = {key: M.unit_state(index[T]) for key, T in inf.g.items()}
        s = {a: tuple((f, tuple(M.unit_state(index[c]) for c in ch), w) for f, ch, w in heads)
             for a, heads in inf.s.items()}
        sroots.append(((M.add(gtrans=g, souts=s), 1),))
        rroots.append(((M.add(exits=dict(inf.x)), 1),) if inf.x else EMPTY)
        row = []
        for (a, u) in sorted(inf.g):
            row.append(Comp(Comp(_atom_term(sig, a), Act(u)), inj_term(index[inf.g[(a, u)]], m)))
        for a in sorted(inf.s):
            for f, ch, w in inf.s[a]:
                kids = [inj_term(index[c], m) for c in ch]
                body = Comp(Comp(_atom_term(sig, a), Gen(f, len(ch))), cotuple_of(kids))
                row.append(_weighted(w, body))
        srows.append(_sum_terms(row, 1, m))
        rrow = [_weighted(w, Comp(_atom_term(sig, a), inj_term(j, k)))
                for (a, j), w in sorted(inf.x.items())]
        rrows.append(_sum_terms(rrow, 1, k))
    inj = Morphism(MorphType(n, m), tuple(M.unit_state(i) for i in range(n)), M)
    inj_t = Id(n) if n == m else InjL(n, m - n)
    return DefinableForm(
        m=m,
        inj=inj,
        s=Morphism(MorphType(m, m), tuple(sroots), M),
        r=Morphism(MorphType(m, k), tuple(rroots), M),
        basis=basis,
        inj_term=inj_t,
        s_term=cotuple_of(srows),
        r_term=cotuple_of(rrows),
    )


# -- DOT ----------------------------------------------------------------------------

def _wlabel(w):
    return "" if w == 1 else f" ({Weight(w)})"


def to_dot(p: Morphism, name: str = "morphism") -> str:
    M = p.machine
    sig = M.sig
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for i, S in enumerate(p.roots):
        lines.append(f'  root{i} [shape=point, xlabel="root {i}"];')
        for nid, w in S:
            lines.append(f'  root{i} -> n{nid} [label="{Weight(w)}"];')
    for nid in reachable_nodes(p):
        node = M.nodes[nid]
        ex = [f"{sig.atom_label(a)}→{i} ({Weight(w)})" for (a, i), w in sorted(node.exits.items())]
        label = "\\n".join([f"n{nid}"] + ex)
        lines.append(f'  n{nid} [label="{label}"];')
        for (a, u), T in sorted(node.gtrans.items()):
            for m, w in T:
                lines.append(f'  n{nid} -> n{m} [label="{sig.atom_label(a)}/{u}{_wlabel(w)}"];')
        for a in sorted(node.souts):
            for f, ch, hw in node.souts[a]:
                for j, c in enumerate(ch):
                    for m, w in c:
                        lab = f"{sig.atom_label(a)}/{f}·{j}{_wlabel(_mul(w, hw))}"
                        lines.append(f'  n{nid} -> n{m} [label="{lab}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
