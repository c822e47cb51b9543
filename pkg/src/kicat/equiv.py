"""Equality of compiled morphisms by partition refinement on determinized
states, plus witnesses, minimization and the componentwise diagnostic."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .errors import BudgetExceeded, TypeMismatch
from .rattree import EMPTY, Machine, Morphism, reachable_nodes
from .weights import Weight

DEFAULT_BUDGET = 200_000


# -- refinement -------------------------------------------------------------------------

class Partition:
    """Bisimulation classes of all states reachable from some roots."""

    def __init__(self, M: Machine, roots, budget: int = DEFAULT_BUDGET):
        self.M = M
        states = [EMPTY]
        index = {EMPTY: 0}
        for S in roots:
            if S not in index:
                index[S] = len(states)
                states.append(S)
        succs, heads, exits = [], [], []
        i = 0
        while i < len(states):
            inf = M.info(states[i])
            i += 1
            sl = []
            for key, T in inf.g.items():
                j = index.get(T)
                if j is None:
                    j = index[T] = len(states)
                    states.append(T)
                sl.append((key, j))
            sl.sort()
            hl = []
            for a, hs in inf.s.items():
                for f, ch, w in hs:
                    tup = []
                    for c in ch:
                        j = index.get(c)
                        if j is None:
                            j = index[c] = len(states)
                            states.append(c)
                        tup.append(j)
                    hl.append((a, f, tuple(tup), w))
            succs.append(sl)
            heads.append(hl)
            exits.append(tuple(sorted(inf.x.items())))
            if len(states) > budget:
                raise BudgetExceeded(f"determinization exceeded {budget} states")
        self.states = states
        self.index = index
        self.succs = succs
        self.heads = heads
        self.exits = exits
        self.cls = self._refine()

    def _refine(self):
        n = len(self.states)
        cls = _number(self.exits)
        count = max(cls) + 1
        while True:
            zc = cls[0]
            keys = []
            for i in range(n):
                g = tuple((k, cls[j]) for k, j in self.succs[i] if cls[j] != zc)
                keys.append((cls[i], g, self._head_sig(i, cls)))
            new = _number(keys)
            c2 = max(new) + 1
            if c2 == count:
                return new
            cls, count = new, c2

    def _head_sig(self, i, cls):
        hl = self.heads[i]
        if not hl:
            return ()
        d: dict = {}
        for a, f, tup, w in hl:
            k = (a, f, tuple(cls[j] for j in tup))
            if w > d.get(k, 0):
                d[k] = w
        return tuple(sorted(d.items()))

    def cls_of(self, S):
        return self.cls[self.index[S]]

    def head_map(self, S, atom=None):
        """Class-level head weights of ``S``: ``(atom, op, class tuple) -> w``."""
        d = dict(self._head_sig(self.index[S], self.cls))
        if atom is not None:
            d = {k: w for k, w in d.items() if k[0] == atom}
        return d


def _number(keys):
    ids: dict = {}
    out = []
    for k in keys:
        c = ids.get(k)
        if c is None:
            c = ids[k] = len(ids)
        out.append(c)
    return out


def _same_machine(p: Morphism, q: Morphism):
    if p.type != q.type:
        raise TypeMismatch(f"comparing {p.type} with {q.type}")
    return p, p.machine.adopt(q)


def equal(p: Morphism, q: Morphism, budget: int = DEFAULT_BUDGET) -> bool:
    p, q = _same_machine(p, q)
    if p.roots == q.roots:
        return True
    part = Partition(p.machine, p.roots + q.roots, budget)
    return all(part.cls_of(a) == part.cls_of(b) for a, b in zip(p.roots, q.roots))


# -- witnesses --------------------------------------------------------------------------

@dataclass(frozen=True)
class ActStep:
    atom: int
    action: str


@dataclass(frozen=True)
class OpStep:
    atom: int
    op: str
    child: int


@dataclass(frozen=True)
class ExitMismatch:
    atom: int
    index: int
    left: Weight
    right: Weight


@dataclass(frozen=True)
class SigmaMismatch:
    atom: int
    op: str
    left: tuple
    right: tuple


Move = Union[ActStep, OpStep]


@dataclass(frozen=True)
class Witness:
    root: int
    moves: tuple
    discrepancy: Union[ExitMismatch, SigmaMismatch]

    def render(self, sig) -> str:
        lines = [f"root {self.root}"]
        for m in self.moves:
            if isinstance(m, ActStep):
                lines.append(f"step {sig.atom_label(m.atom)}/{m.action}")
            else:
                lines.append(f"enter {sig.atom_label(m.atom)}/{m.op}.child {m.child}")
        d = self.discrepancy
        if isinstance(d, ExitMismatch):
            lines.append(f"exit({sig.atom_label(d.atom)},{d.index}): {d.left} vs {d.right}")
        else:
            lines.append(f"sigma({sig.atom_label(d.atom)},{d.op}): "
                         f"{_render_heads(d.left)} vs {_render_heads(d.right)}")
        return "\n".join(lines)


def _render_heads(hs):
    return "{" + ", ".join(f"({','.join('#' + str(c) for c in tup)}):{Weight(w)}"
                           for tup, w in hs) + "}"


def _exit_diff(M, S, T):
    xs, xt = M.info(S).x, M.info(T).x
    for key in sorted(set(xs) | set(xt)):
        a, b = xs.get(key, 0), xt.get(key, 0)
        if a != b:
            return ExitMismatch(key[0], key[1], Weight(a), Weight(b))
    return None


def _sigma_diff(part, S, T):
    hs, ht = part.head_map(S), part.head_map(T)
    if hs == ht:
        return None
    for a, f in sorted({k[:2] for k in hs} | {k[:2] for k in ht}):
        ls = tuple(sorted((k[2], w) for k, w in hs.items() if k[:2] == (a, f)))
        rs = tuple(sorted((k[2], w) for k, w in ht.items() if k[:2] == (a, f)))
        if ls != rs:
            return SigmaMismatch(a, f, ls, rs)
    return None


def _single_heads(M, S, T, atom, op):
    hs = [h for h in M.info(S).s.get(atom, ()) if h[0] == op]
    ht = [h for h in M.info(T).s.get(atom, ()) if h[0] == op]
    if len(hs) == 1 and len(ht) == 1 and hs[0][2] == ht[0][2]:
        return hs[0], ht[0]
    return None


def witness(p: Morphism, q: Morphism, budget: int = DEFAULT_BUDGET) -> Optional[Witness]:
    """Shortest distinguishing experiment, or ``None`` when equal."""
    p, q = _same_machine(p, q)
    M = p.machine
    part = Partition(M, p.roots + q.roots, budget)
    for i, (S, T) in enumerate(zip(p.roots, q.roots)):
        if part.cls_of(S) == part.cls_of(T):
            continue
        return _search(M, part, i, S, T)
    return None


def _search(M, part, root, S0, T0):
    seen = {(S0, T0)}
    queue = deque([(S0, T0, ())])
    fallback = None
    while queue:
        S, T, moves = queue.popleft()
        d = _exit_diff(M, S, T)
        if d is not None:
            return Witness(root, moves, d)
        sd = _sigma_diff(part, S, T)
        nexts = []
        gs, gt = M.info(S).g, M.info(T).g
        for key in sorted(set(gs) | set(gt)):
            a, b = gs.get(key, EMPTY), gt.get(key, EMPTY)
            if part.cls_of(a) != part.cls_of(b):
                nexts.append((a, b, moves + (ActStep(*key),)))
        descended = False
        if sd is not None:
            pair = _single_heads(M, S, T, sd.atom, sd.op)
            if pair is not None:
                (_, cs, _), (_, ct, _) = pair
                for j, (a, b) in enumerate(zip(cs, ct)):
                    if part.cls_of(a) != part.cls_of(b):
                        nexts.append((a, b, moves + (OpStep(sd.atom, sd.op, j),)))
                        descended = True
            if not descended:
                return Witness(root, moves, sd)
            if fallback is None:
                fallback = Witness(root, moves, sd)
        for a, b, mv in nexts:
            if (a, b) not in seen:
                seen.add((a, b))
                queue.append((a, b, mv))
    return fallback


def replay(p: Morphism, q: Morphism, w: Witness) -> bool:
    """Follow the witness from both roots and confirm its discrepancy."""
    p, q = _same_machine(p, q)
    M = p.machine
    S, T = p.roots[w.root], q.roots[w.root]
    for m in w.moves:
        if isinstance(m, ActStep):
            S, T = M.deriv_action(S, m.atom, m.action), M.deriv_action(T, m.atom, m.action)
        else:
            pair = _single_heads(M, S, T, m.atom, m.op)
            if pair is None:
                return False
            S, T = pair[0][1][m.child], pair[1][1][m.child]
    d = w.discrepancy
    if isinstance(d, ExitMismatch):
        a = M.info(S).x.get((d.atom, d.index), 0)
        b = M.info(T).x.get((d.atom, d.index), 0)
        return a == d.left and b == d.right and a != b
    part = Partition(M, (S, T))
    sd = _sigma_diff(part, S, T)
    return sd is not None


# -- minimization -----------------------------------------------------------------------

def minimize(p: Morphism, budget: int = DEFAULT_BUDGET) -> Morphism:
    """Quotient by bisimilarity; classes are numbered in breadth-first order
    from the roots, so isomorphic inputs give identical machines."""
    M = p.machine
    part = Partition(M, p.roots, budget)
    zc = part.cls_of(EMPTY)
    rep = {}
    for i, S in enumerate(part.states):
        rep.setdefault(part.cls[i], S)
    order = []
    seen = set()
    queue = deque(part.cls_of(S) for S in p.roots)
    while queue:
        c = queue.popleft()
        if c in seen or c == zc:
            continue
        seen.add(c)
        order.append(c)
        inf = M.info(rep[c])
        for key in sorted(inf.g):
            queue.append(part.cls_of(inf.g[key]))
        for k, _ in sorted(part.head_map(rep[c]).items()):
            queue.extend(k[2])
    out = Machine(M.sig)
    ids = {c: out.add() for c in order}

    def st(c):
        return ((ids[c], 1),) if c != zc else EMPTY

    for c in order:
        S = rep[c]
        inf = M.info(S)
        node = out.nodes[ids[c]]
        node.exits = dict(inf.x)
        node.gtrans = {k: st(part.cls_of(T)) for k, T in inf.g.items() if part.cls_of(T) != zc}
        heads: dict = {}
        for (a, f, tup), w in part.head_map(S).items():
            heads.setdefault(a, []).append((f, tuple(st(x) for x in tup), w))
        node.souts = {a: tuple(sorted(hs)) for a, hs in heads.items()}
    return Morphism(p.type, tuple(st(part.cls_of(S)) for S in p.roots), out)


def state_count(p: Morphism) -> int:
    """Number of nodes reachable from the roots."""
    return len(reachable_nodes(p))


# -- componentwise diagnostic ----------------------------------------------------------

def lemma_bisim_equal(p: Morphism, q: Morphism, budget: int = DEFAULT_BUDGET) -> bool:
    """Greatest relation closed under action derivatives and componentwise
    operation derivatives with equal outputs.  Coarser than ``equal``."""
    p, q = _same_machine(p, q)
    M = p.machine
    arity = M.sig.arity
    states = [EMPTY]
    index = {EMPTY: 0}
    for S in p.roots + q.roots:
        if S not in index:
            index[S] = len(states)
            states.append(S)
    succs, exits = [], []
    i = 0
    while i < len(states):
        S = states[i]
        inf = M.info(S)
        i += 1
        targets = [(("g",) + key, T) for key, T in inf.g.items()]
        for a, hs in inf.s.items():
            for f in sorted({h[0] for h in hs}):
                for k in range(arity[f]):
                    targets.append((("s", a, f, k), M.deriv_op(S, a, f, k)))
        sl = []
        for key, T in targets:
            j = index.get(T)
            if j is None:
                j = index[T] = len(states)
                states.append(T)
            sl.append((key, j))
        sl.sort()
        succs.append(sl)
        exits.append(tuple(sorted(inf.x.items())))
        if len(states) > budget:
            raise BudgetExceeded(f"closure exceeded {budget} states")
    cls = _number(exits)
    count = max(cls) + 1
    while True:
        zc = cls[0]
        new = _number([(cls[i], tuple((k, cls[j]) for k, j in succs[i] if cls[j] != zc))
                       for i in range(len(states))])
        c2 = max(new) + 1
        if c2 == count:
            break
        cls, count = new, c2
    return all(cls[index[a]] == cls[index[b]] for a, b in zip(p.roots, q.roots))
