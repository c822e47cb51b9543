"""Equivalence checking for Kleene iteration categories with tests.

Terms are compiled to finite automata over guarded strings whose exits carry
weights in {0, 1, inf}; two terms are equal when their automata are bisimilar.
"""
from .equiv import Witness, equal, lemma_bisim_equal, minimize, replay, witness
from .errors import (
    BudgetExceeded, KicatError, NotATest, NotTame, SignatureError, TermSyntaxError,
    TypeMismatch, UnsatisfiableRequest,
)
from .parser import parse_program, parse_term
from .rattree import Machine, Morphism, compile, to_definable, to_dot
from .syntax import MorphType, Signature, TermClass, classify, desugar, load_signature, show
from .weights import Weight


def decide(lhs: str, rhs: str, sig: Signature | None = None) -> bool:
    """Parse two terms and decide whether they denote the same morphism."""
    from .syntax import Plus
    sig = sig or Signature.default()
    joint = parse_term(f"({lhs}) + ({rhs})", sig)
    assert isinstance(joint, Plus)
    M = Machine(sig)
    return equal(compile(desugar(joint.left, sig), sig, M),
                 compile(desugar(joint.right, sig), sig, M))


__all__ = [
    "BudgetExceeded", "KicatError", "Machine", "MorphType", "Morphism", "NotATest",
    "NotTame", "Signature", "SignatureError", "TermClass", "TermSyntaxError",
    "TypeMismatch", "UnsatisfiableRequest", "Weight", "Witness", "classify",
    "compile", "decide", "desugar", "equal", "lemma_bisim_equal", "load_signature",
    "minimize", "parse_program", "parse_term", "replay", "show", "to_definable",
    "to_dot", "witness",
]
