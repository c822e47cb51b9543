"""The three-element complete semiring {0, 1, inf}, atoms, guarded strings
and matrices over atom-indexed weights.

Weights are an ``IntEnum`` so they can be mixed freely with the plain ints
0, 1, 2 used inside the automaton code.
"""
from __future__ import annotations

from enum import IntEnum
from typing import Sequence

from .errors import CapExceeded

ATOM_CAP = 6


class Weight(IntEnum):
    ZERO = 0
    ONE = 1
    INF = 2

    def __str__(self):
        return ("0", "1", "inf")[self]

    @classmethod
    def parse(cls, text):
        return {"0": cls.ZERO, "1": cls.ONE, "inf": cls.INF, "∞": cls.INF}[text.strip()]


ZERO, ONE, INF = Weight.ZERO, Weight.ONE, Weight.INF


def w_add(a, b):
    return Weight(a if a >= b else b)


def w_mul(a, b):
    if not a or not b:
        return ZERO
    return Weight(a if a >= b else b)


def w_star(a):
    return ONE if not a else INF


def w_sum(ws):
    """Join of a finite family."""
    out = 0
    for w in ws:
        if w > out:
            out = w
    return Weight(out)


# -- atoms -------------------------------------------------------------------

def enumerate_atoms(tests: Sequence[str], cap: int = ATOM_CAP) -> list[int]:
    """Atoms as bitsets over ``tests``; bit i set means tests[i] holds."""
    if len(tests) > cap:
        raise CapExceeded(f"{len(tests)} tests exceed the atom cap of {cap}")
    return list(range(1 << len(tests)))


def atom_holds(atom: int, index: int) -> bool:
    return bool(atom >> index & 1)


def atom_label(atom: int, tests: Sequence[str]) -> str:
    names = [t for i, t in enumerate(tests) if atom >> i & 1]
    return "<" + " ".join(names) + ">"


# -- guarded strings -----------------------------------------------------------
# A guarded string is a tuple (atom, action, atom, ..., action, atom).

def gs_atom(atom: int) -> tuple:
    return (atom,)


def gs_first(x: tuple) -> int:
    return x[0]


def gs_last(x: tuple) -> int:
    return x[-1]


def gs_length(x: tuple) -> int:
    """Number of actions."""
    return len(x) // 2


def gs_fuse(x: tuple, y: tuple):
    """Fusion product; ``None`` plays the role of zero."""
    if x[-1] != y[0]:
        return None
    return x + y[1:]


def gs_valid(x) -> bool:
    if not isinstance(x, tuple) or len(x) % 2 != 1:
        return False
    return all(isinstance(x[i], int) for i in range(0, len(x), 2)) and all(
        isinstance(x[i], str) for i in range(1, len(x), 2)
    )


def gs_label(x: tuple, tests: Sequence[str]) -> str:
    parts = []
    for i, item in enumerate(x):
        parts.append(atom_label(item, tests) if i % 2 == 0 else item)
    return " ".join(parts)


# -- atom-indexed weights ------------------------------------------------------

class AtomWeight:
    """A total map from atoms to weights, stored as a tuple indexed by atom."""

    __slots__ = ("w",)

    def __init__(self, w):
        object.__setattr__(self, "w", tuple(Weight(x) for x in w))

    def __setattr__(self, name, value):
        raise AttributeError("AtomWeight is immutable")

    @classmethod
    def const(cls, natoms, value):
        return cls([value] * natoms)

    @classmethod
    def zero(cls, natoms):
        return cls.const(natoms, ZERO)

    @classmethod
    def one(cls, natoms):
        return cls.const(natoms, ONE)

    def __len__(self):
        return len(self.w)

    def __getitem__(self, atom):
        return self.w[atom]

    def __add__(self, other):
        return AtomWeight(w_add(a, b) for a, b in zip(self.w, other.w))

    def __mul__(self, other):
        return AtomWeight(w_mul(a, b) for a, b in zip(self.w, other.w))

    def star(self):
        return AtomWeight(w_star(a) for a in self.w)

    def is_zero(self):
        return not any(self.w)

    def __eq__(self, other):
        return isinstance(other, AtomWeight) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return "AtomWeight(" + ",".join(str(x) for x in self.w) + ")"


# -- matrices ------------------------------------------------------------------

def qmat_mul(a, b):
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * k for _ in range(n)]
    for i in range(n):
        row = a[i]
        for j in range(m):
            x = row[j]
            if not x:
                continue
            brow = b[j]
            orow = out[i]
            for c in range(k):
                y = brow[c]
                if y:
                    v = x if x >= y else y
                    if v > orow[c]:
                        orow[c] = v
    return out


def qmat_add(a, b):
    return [[x if x >= y else y for x, y in zip(r, s)] for r, s in zip(a, b)]


def qmat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def qmat_star(m):
    """Star of a square scalar matrix by Gauss-Kleene elimination.

    Each pivot step folds paths through vertex k into the running matrix;
    the result is the plus-closure, and the star adds the identity.
    """
    n = len(m)
    a = [list(r) for r in m]
    for k in range(n):
        s = w_star(a[k][k])
        col = [a[i][k] for i in range(n)]
        row = a[k][:]
        for i in range(n):
            x = col[i]
            if not x:
                continue
            xs = x if x >= s else s
            for j in range(n):
                y = row[j]
                if y:
                    v = xs if xs >= y else y
                    if v > a[i][j]:
                        a[i][j] = v
    for i in range(n):
        if a[i][i] < 1:
            a[i][i] = 1
    return [[Weight(x) for x in r] for r in a]


class WMatrix:
    """Square matrix of ``AtomWeight`` entries."""

    __slots__ = ("n", "natoms", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("WMatrix must be square")
        natoms = len(rows[0][0]) if n else 0
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "natoms", natoms)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("WMatrix is immutable")

    @classmethod
    def from_scalars(cls, rows, natoms=1):
        return cls([[AtomWeight.const(natoms, x) for x in r] for r in rows])

    @classmethod
    def identity(cls, n, natoms):
        return cls([[AtomWeight.const(natoms, ONE if i == j else ZERO) for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zero(cls, n, natoms):
        return cls([[AtomWeight.zero(natoms)] * n for _ in range(n)])

    def at_atom(self, atom):
        return [[e[atom] for e in r] for r in self.entries]

    @classmethod
    def from_atom_slices(cls, slices):
        natoms = len(slices)
        n = len(slices[0])
        return cls([[AtomWeight(slices[a][i][j] for a in range(natoms)) for j in range(n)]
                    for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        return WMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __mul__(self, other):
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = AtomWeight.zero(self.natoms)
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return WMatrix(out)

    def __eq__(self, other):
        return isinstance(other, WMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"WMatrix({[list(r) for r in self.entries]})"


def mat_star(m: WMatrix) -> WMatrix:
    """Matrix star, computed independently for every atom."""
    if m.n == 0:
        return m
    return WMatrix.from_atom_slices([qmat_star(m.at_atom(a)) for a in range(m.natoms)])
