"""Recursive-descent parsers for LTL and the LTL' debug syntax.

LTL precedence, tightest first: unary ``! G F X``, ``U`` (right-assoc),
``&``, ``|``, ``->`` (right-assoc), ``<->``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ltlc import ltl, prime
from ltlc.terms import EVAL, PathTerm, Succ, Var


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError("span start after end")


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan, expected: frozenset[str] = frozenset()):
        self.message = message
        self.span = span
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at {span.start}..{span.end}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan


_KEYWORDS = {"true", "false"}

_LTL_TOKENS = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op><->|->|[!&|()])
  | (?P<ident>[a-z][a-zA-Z0-9_]*)
  | (?P<upper>[GFXU])
    """,
    re.VERBOSE,
)

_PRIME_TOKENS = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op><->|->|[!&|()\[\],@])
  | (?P<ident>[a-z][a-zA-Z0-9_]*)
  | (?P<upper>Fx(?=\s*\[)|Gh(?=\s*\[)|[GXS])
    """,
    re.VERBOSE,
)


def tokenize(text: str, pattern: re.Pattern = _LTL_TOKENS) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = pattern.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1))
        kind = m.lastgroup
        if kind != "ws":
            word = m.group()
            if kind == "ident" and word in _KEYWORDS:
                kind = "op"
            if kind == "upper":
                kind = "op"
            tokens.append(Token(kind, word, SourceSpan(m.start(), m.end())))
        pos = m.end()
    tokens.append(Token("eof", "", SourceSpan(len(text), len(text))))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({text})
        return self.advance()

    def fail(self, expected: set[str]):
        tok = self.tok
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"unexpected {what}", tok.span, frozenset(expected))

    def finish(self, result):
        if self.tok.kind != "eof":
            self.fail({"end of input"})
        return result


_ATOM_START = {"identifier", "true", "false", "("}


class _LtlParser(_Parser):
    def formula(self) -> ltl.Ltl:
        left = self.impl()
        while self.at("<->"):
            self.advance()
            left = ltl.Iff(left, self.impl())
        return left

    def impl(self) -> ltl.Ltl:
        left = self.disj()
        if self.at("->"):
            self.advance()
            return ltl.Implies(left, self.impl())
        return left

    def disj(self) -> ltl.Ltl:
        left = self.conj()
        while self.at("|"):
            self.advance()
            left = ltl.Or(left, self.conj())
        return left

    def conj(self) -> ltl.Ltl:
        left = self.until()
        while self.at("&"):
            self.advance()
            left = ltl.And(left, self.until())
        return left

    def until(self) -> ltl.Ltl:
        left = self.unary()
        if self.at("U"):
            self.advance()
            return ltl.Until(left, self.until())
        return left

    def unary(self) -> ltl.Ltl:
        for text, cls in (("!", ltl.Not), ("G", ltl.G), ("F", ltl.F), ("X", ltl.X)):
            if self.at(text):
                self.advance()
                return cls(self.unary())
        return self.atom()

    def atom(self) -> ltl.Ltl:
        tok = self.tok
        if tok.kind == "ident":
            self.advance()
            return ltl.Atom(tok.text)
        if self.at("true"):
            self.advance()
            return ltl.Top()
        if self.at("false"):
            self.advance()
            return ltl.Bottom()
        if self.at("("):
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        self.fail(_ATOM_START | {"!", "G", "F", "X"})


def parse_ltl(text: str) -> ltl.Ltl:
    p = _LtlParser(tokenize(text))
    return p.finish(p.formula())


class _PrimeParser(_Parser):
    def formula(self) -> prime.Prime:
        left = self.conj()
        while self.at("|"):
            self.advance()
            left = prime.Or(left, self.conj())
        return left

    def conj(self) -> prime.Prime:
        left = self.unary()
        while self.at("&"):
            self.advance()
            left = prime.And(left, self.unary())
        return left

    def unary(self) -> prime.Prime:
        for text, cls in (("!", prime.Not), ("G", prime.G), ("X", prime.X)):
            if self.at(text):
                self.advance()
                return cls(self.unary())
        if self.at("Fx"):
            self.advance()
            self.expect("[")
            tok = self.tok
            if tok.kind != "ident":
                self.fail({"identifier"})
            self.advance()
            self.expect("]")
            return prime.Fx(tok.text, self.unary())
        if self.at("Gh"):
            start = self.advance()
            self.expect("[")
            lo = self.term()
            self.expect(",")
            hi = self.term()
            self.expect("]")
            if lo == hi:
                raise ParseError("Gh bounds must differ", SourceSpan(start.span.start, self.tok.span.start))
            return prime.Ghat(lo, hi, self.unary())
        return self.atom()

    def term(self) -> PathTerm:
        if self.at("@"):
            self.advance()
            return EVAL
        if self.at("S"):
            self.advance()
            self.expect("(")
            inner = self.term()
            self.expect(")")
            return Succ(inner)
        tok = self.tok
        if tok.kind == "ident":
            self.advance()
            return Var(tok.text)
        self.fail({"@", "S", "identifier"})

    def atom(self) -> prime.Prime:
        tok = self.tok
        if tok.kind == "ident":
            self.advance()
            return prime.Atom(tok.text)
        if self.at("true"):
            self.advance()
            return prime.Top()
        if self.at("false"):
            self.advance()
            return prime.Bottom()
        if self.at("("):
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        self.fail(_ATOM_START | {"!", "G", "X", "Fx", "Gh"})


def parse_ltlprime(text: str) -> prime.Prime:
    """Parse LTL' debug syntax: ``Fx[x] phi``, ``Gh[t1,t2] phi``, terms ``@``, ``S(t)``."""
    p = _PrimeParser(tokenize(text, _PRIME_TOKENS))
    return p.finish(p.formula())
