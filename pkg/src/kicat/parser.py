"""Tokenizer and recursive-descent parser for terms and program files.

Grammar (terms)::

    sum     := seq (("+" | "|") seq)*
    seq     := unary ((";" | "." | "&") unary)*
    unary   := "~" unary | postfix
    postfix := primary "*"*
    primary := ident | ident "(" sum ("," sum)* ")" | "(" sum ")"
             | "[" sum ("," sum)+ "]" | "id" dims? | "0" dims? | "inl" dims?
             | "inr" dims? | "top" dims? | "bot" dims?
             | "if" sum "then" sum "else" sum "fi"
             | "ifd" sum "then" sum "else" sum "fi"
             | "while" sum "do" sum "od" | "whiled" sum "do" sum "od"
             | "dagger" "(" sum ")" | "dia" "(" sum ")" | "query" "(" sum ")"

A ``;`` that is not followed by the start of a term ends a declaration.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import TermSyntaxError, TypeMismatch, UnknownIdentifier
from .syntax import (
    Act, And, Bot, Comp, Dagger, Diamond, Gen, Id, IfDec, IfTest, InjL, InjR,
    MorphType, NegTest, Not, Or, Plus, Query, Signature, Star, Term, Test, Top,
    WhileDec, WhileTest, Zero, cotuple_of, infer_types, load_signature,
)

KEYWORDS = {
    "id", "inl", "inr", "top", "bot", "if", "then", "else", "fi", "ifd",
    "while", "do", "od", "whiled", "dagger", "dia", "query", "def", "check", "sig",
}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*|//[^\n]*)
  | (?P<op>==|!=|->|[()\[\],;.+*~&|@:=])
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.X)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int
    pos: int = 0


def tokenize(text: str) -> list[Token]:
    out = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                if kind == "ident" and s in KEYWORDS:
                    kind = "kw"
                out.append(Token(kind, s, line, col, pos))
            col += len(s)
        pos = m.end()
    out.append(Token("eof", "", line, col, pos))
    return out


@dataclass
class Check:
    lhs: Term
    rhs: Term
    positive: bool
    line: int
    text: str


@dataclass
class Program:
    sig: Signature
    defs: dict = field(default_factory=dict)  # name -> (MorphType, Term)
    checks: list = field(default_factory=list)


_TERM_START = {"ident", "num"}
_TERM_START_OPS = {"(", "[", "~"}
_TERM_START_KW = {"id", "inl", "inr", "top", "bot", "if", "ifd", "while", "whiled",
                  "dagger", "dia", "query"}


class _Parser:
    def __init__(self, tokens, sig, defs, source=""):
        self.toks = tokens
        self.source = source
        self.i = 0
        self.sig = sig
        self.defs = defs

    # helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        raise TermSyntaxError(msg, tok.line, tok.col)

    def at(self, text, kind=None):
        t = self.tok
        return t.text == text and (kind is None or t.kind == kind) and t.kind != "eof"

    def eat(self, text):
        if not self.at(text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.i += 1
        return t

    def starts_term(self, t):
        if t.kind in _TERM_START:
            return True
        if t.kind == "op" and t.text in _TERM_START_OPS:
            return True
        return t.kind == "kw" and t.text in _TERM_START_KW

    # terms
    def sum(self):
        left = self.seq()
        while self.at("+") or self.at("|"):
            op = self.tok.text
            self.i += 1
            right = self.seq()
            left = Plus(left, right) if op == "+" else Or(left, right)
        return left

    def seq(self):
        left = self.unary()
        while self.at(";") or self.at(".") or self.at("&"):
            op = self.tok.text
            if op in ";." and not self.starts_term(self.peek()):
                break
            self.i += 1
            right = self.unary()
            left = And(left, right) if op == "&" else Comp(left, right)
        return left

    def unary(self):
        if self.at("~"):
            self.i += 1
            inner = self.unary()
            if isinstance(inner, Test):
                return NegTest(inner.name)
            return Not(inner)
        return self.postfix()

    def postfix(self):
        t = self.primary()
        while self.at("*"):
            self.i += 1
            t = Star(t)
        return t

    def dims(self, count):
        if not self.at("@"):
            return (None,) * count
        self.i += 1
        if count == 1 and self.tok.kind == "num":
            return (self.nat(),)
        self.eat("(")
        vals = [self.nat()]
        while self.at(","):
            self.i += 1
            vals.append(self.nat())
        self.eat(")")
        if len(vals) != count:
            self.error(f"expected {count} dimensions")
        return tuple(vals)

    def nat(self):
        t = self.tok
        if t.kind != "num":
            self.error(f"expected a number, found {t.text!r}")
        self.i += 1
        return int(t.text)

    def primary(self):
        t = self.tok
        if t.kind == "op" and t.text == "(":
            self.i += 1
            inner = self.sum()
            self.eat(")")
            return inner
        if t.kind == "op" and t.text == "[":
            self.i += 1
            items = [self.sum()]
            while self.at(","):
                self.i += 1
                items.append(self.sum())
            self.eat("]")
            if len(items) < 2:
                self.error("a cotuple needs at least two components", t)
            return cotuple_of(items)
        if t.kind == "num":
            if t.text != "0":
                self.error(f"unexpected number {t.text}")
            self.i += 1
            return Zero(*self.dims(2))
        if t.kind == "kw":
            return self.keyword(t)
        if t.kind == "ident":
            return self.ident(t)
        self.error(f"unexpected {t.text or 'end of input'!r}")

    def keyword(self, t):
        w = t.text
        self.i += 1
        if w == "id":
            return Id(*self.dims(1))
        if w == "top":
            return Top(*self.dims(1))
        if w == "bot":
            return Bot(*self.dims(1))
        if w == "inl":
            return InjL(*self.dims(2))
        if w == "inr":
            return InjR(*self.dims(2))
        if w in ("if", "ifd"):
            c = self.sum()
            self.eat("then")
            p = self.sum()
            self.eat("else")
            q = self.sum()
            self.eat("fi")
            return IfTest(c, p, q) if w == "if" else IfDec(c, p, q)
        if w in ("while", "whiled"):
            c = self.sum()
            self.eat("do")
            p = self.sum()
            self.eat("od")
            return WhileTest(c, p) if w == "while" else WhileDec(c, p)
        if w in ("dagger", "dia", "query"):
            self.eat("(")
            p = self.sum()
            self.eat(")")
            return {"dagger": Dagger, "dia": Diamond, "query": Query}[w](p)
        self.error(f"unexpected keyword {w!r}", t)

    def ident(self, t):
        name = t.text
        self.i += 1
        kind = self.sig.kind_of(name)
        if kind == "op":
            g = Gen(name, self.sig.arity[name])
            if self.at("("):
                self.i += 1
                args = [self.sum()]
                while self.at(","):
                    self.i += 1
                    args.append(self.sum())
                self.eat(")")
                if len(args) != g.arity:
                    raise TypeMismatch(
                        f"line {t.line}, col {t.col}: {name} takes {g.arity} arguments, got {len(args)}")
                return Comp(g, cotuple_of(args) if len(args) > 1 else args[0])
            return g
        if name in self.defs:
            return self.defs[name][1]
        if kind == "action":
            return Act(name)
        if kind == "test":
            return Test(name)
        raise UnknownIdentifier(f"unknown identifier {name!r}", t.line, t.col)

    # program
    def program(self):
        decls = []
        checks = []
        while self.at("sig", "kw"):
            self.i += 1
            kind_tok = self.tok
            if kind_tok.text not in ("actions", "tests", "ops"):
                self.error("expected actions, tests or ops after sig")
            self.i += 1
            items = []
            while True:
                nt = self.tok
                if nt.kind not in ("ident",):
                    self.error(f"expected a name, found {nt.text!r}")
                self.i += 1
                if kind_tok.text == "ops":
                    self.eat(":")
                    items.append((nt.text, self.nat()))
                else:
                    items.append(nt.text)
                if not self.at(","):
                    break
                self.i += 1
            self.eat(";")
            decls.append((kind_tok.text, items))
        if decls:
            try:
                self.sig = load_signature(decls, self.sig.cap)
            except Exception as e:
                if isinstance(e, TermSyntaxError):
                    raise
                from .errors import SignatureError
                if isinstance(e, SignatureError):
                    raise
                self.error(str(e))
        while self.at("def", "kw"):
            self.i += 1
            nt = self.tok
            if nt.kind != "ident":
                self.error(f"expected a definition name, found {nt.text!r}")
            if nt.text in self.defs or self.sig.kind_of(nt.text):
                raise TermSyntaxError(f"name {nt.text!r} already in use", nt.line, nt.col)
            self.i += 1
            self.eat(":")
            n = self.nat()
            self.eat("->")
            k = self.nat()
            self.eat("=")
            term = self.sum()
            self.terminator()
            ty = MorphType(n, k)
            try:
                term = infer_types(term, ty, self.sig)
            except TypeMismatch as e:
                raise TypeMismatch(f"line {nt.line}: in definition {nt.text}: {e}") from None
            self.defs[nt.text] = (ty, term)
        while self.at("check", "kw"):
            start = self.tok
            self.i += 1
            begin = self.i
            lhs = self.sum()
            if self.at("=="):
                positive = True
            elif self.at("!="):
                positive = False
            else:
                self.error("expected == or !=")
            self.i += 1
            rhs = self.sum()
            end = self.i
            self.terminator()
            last = self.toks[end - 1]
            text = " ".join(self.source[self.toks[begin].pos:last.pos + len(last.text)].split())
            lhs, rhs = _infer_pair(lhs, rhs, self.sig, start.line)
            checks.append(Check(lhs, rhs, positive, start.line, text))
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        return Program(self.sig, dict(self.defs), checks)

    def terminator(self):
        if self.at(";"):
            self.i += 1
        elif self.tok.kind != "eof":
            self.error(f"expected ';', found {self.tok.text!r}")


def _infer_pair(lhs, rhs, sig, line):
    """Infer the two sides of a check so that their types agree."""
    from .syntax import Plus as P
    try:
        joint = infer_types(P(lhs, rhs), None, sig)
    except TypeMismatch as e:
        raise TypeMismatch(f"line {line}: {e}") from None
    return joint.left, joint.right


def parse_term(text: str, sig: Signature, defs=None, expected: MorphType | None = None) -> Term:
    p = _Parser(tokenize(text), sig, dict(defs or {}))
    t = p.sum()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    return infer_types(t, expected, sig)


def parse_program(text: str, sig: Signature | None = None) -> Program:
    """Parse ``sig``/``def``/``check`` declarations.  The file's own ``sig``
    lines replace ``sig`` when present."""
    p = _Parser(tokenize(text), sig or Signature(), {}, text)
    return p.program()
