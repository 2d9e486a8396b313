"""Terms over the enriched signature (product, inverse, m, identity).

Concrete syntax: ``1`` is the identity, juxtaposition is the product
(left-associative), ``^-1`` inverts the preceding factor, ``m(...)`` applies
the class-maximum operation, and parentheses group.  Example::

    m(x y^-1) x
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import TermSyntaxError


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Inv:
    child: "Term"


@dataclass(frozen=True)
class MOp:
    child: "Term"


Term = One | Gen | Mul | Inv | MOp

_TOKEN_RE = re.compile(r"\s*(?:(?P<lpar>\()|(?P<rpar>\))|(?P<inv>\^-1)|(?P<name>[A-Za-z0-9_@]+))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            if text[pos:].strip():
                raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
            break
        for kind in ("lpar", "rpar", "inv", "name"):
            if match[kind] is not None:
                tokens.append((kind, match[kind], match.start(kind)))
                break
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            raise TermSyntaxError(f"expected {kind}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Term:
        term = self.term()
        tok = self.peek()
        if tok is not None:
            raise TermSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return term

    def term(self) -> Term:
        node = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok[0] == "rpar":
                return node
            node = Mul(node, self.factor())

    def factor(self) -> Term:
        node = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "inv":
            self.take()
            node = Inv(node)
        return node

    def atom(self) -> Term:
        tok = self.take()
        kind, value, at = tok
        if kind == "lpar":
            node = self.term()
            self.expect("rpar")
            return node
        if kind == "name":
            if value == "1":
                return One()
            if value == "m" and (nxt := self.peek()) is not None and nxt[0] == "lpar":
                self.take()
                node = self.term()
                self.expect("rpar")
                return MOp(node)
            return Gen(value)
        raise TermSyntaxError(f"unexpected token {value!r}", at)


def parse_term(text: str) -> Term:
    """Parse the concrete syntax above into a term tree."""
    return _Parser(text).parse()


def format_term(term: Term) -> str:
    if isinstance(term, One):
        return "1"
    if isinstance(term, Gen):
        return term.name
    if isinstance(term, Mul):
        return f"{format_term(term.left)} {format_term(term.right)}"
    if isinstance(term, Inv):
        child = format_term(term.child)
        if isinstance(term.child, (Mul, Inv)):
            child = f"({child})"
        return f"{child}^-1"
    if isinstance(term, MOp):
        return f"m({format_term(term.child)})"
    raise TypeError(f"not a term: {term!r}")


def term_size(term: Term) -> int:
    if isinstance(term, (One, Gen)):
        return 1
    if isinstance(term, Mul):
        return 1 + term_size(term.left) + term_size(term.right)
    return 1 + term_size(term.child)


def eval_term(term: Term, model):
    """Evaluate in any model exposing identity, mul, inv, m and generator."""
    if isinstance(term, One):
        return model.identity
    if isinstance(term, Gen):
        return model.generator(term.name)
    if isinstance(term, Mul):
        return model.mul(eval_term(term.left, model), eval_term(term.right, model))
    if isinstance(term, Inv):
        return model.inv(eval_term(term.child, model))
    if isinstance(term, MOp):
        return model.m(eval_term(term.child, model))
    raise TypeError(f"not a term: {term!r}")


def term_letters(term: Term) -> set[str]:
    if isinstance(term, Gen):
        return {term.name}
    if isinstance(term, Mul):
        return term_letters(term.left) | term_letters(term.right)
    if isinstance(term, (Inv, MOp)):
        return term_letters(term.child)
    return set()


def word_term(word) -> Term:
    """The term spelling out a word letter by letter (identity if empty)."""
    node: Term = One()
    for lname, exp in word:
        factor: Term = Gen(lname) if exp > 0 else Inv(Gen(lname))
        node = factor if isinstance(node, One) else Mul(node, factor)
    return node
