"""Parser for the LTL2BA-style ASCII syntax.

Grammar, loosest binding first (all binary operators right-associative)::

    f  ::= f '<->' f | f '->' f
         | f '||' f | f '&&' f
         | f 'U' f  | f 'V' f | f 'R' f
         | '!' f | 'X' f | '<>' f | '[]' f | 'F' f | 'G' f
         | 'true' | 'false' | ident | '(' f ')'

``->`` and ``<->`` are eliminated while parsing.
"""
from __future__ import annotations

import re

from .formula import (And, Always, Eventually, Formula, Next, Not, Or, Release,
                      Until, atom, ff, tt)


class LtlSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<op><->|->|&&|\|\||<>|\[\]|[!()&|~])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
""", re.VERBOSE)

_KEYWORDS = {"U", "V", "R", "X", "F", "G", "true", "false"}


def tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise LtlSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            tok = m.group()
            toks.append(({"&": "&&", "|": "||", "~": "!"}.get(tok, tok), pos))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def take(self) -> str:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, tok: str):
        if self.peek() != tok:
            self.fail(f"expected {tok!r}")
        self.i += 1

    def fail(self, msg: str):
        found = self.peek()
        what = "end of input" if found is None else repr(found)
        raise LtlSyntaxError(f"{msg}, found {what}", self.pos(), self.text)

    def parse(self) -> Formula:
        if not self.toks:
            raise LtlSyntaxError("empty formula", 0, self.text)
        f = self.equiv()
        if self.peek() is not None:
            self.fail("unexpected token")
        return f

    def equiv(self) -> Formula:
        left = self.implies()
        if self.peek() == "<->":
            self.take()
            right = self.equiv()
            return Or(And(left, right), And(Not(left), Not(right)))
        return left

    def implies(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Or(Not(left), self.implies())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        if self.peek() == "||":
            self.take()
            return Or(left, self.disj())
        return left

    def conj(self) -> Formula:
        left = self.binary()
        if self.peek() == "&&":
            self.take()
            return And(left, self.conj())
        return left

    def binary(self) -> Formula:
        left = self.unary()
        tok = self.peek()
        if tok == "U":
            self.take()
            return Until(left, self.binary())
        if tok in ("V", "R"):
            self.take()
            return Release(left, self.binary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "X":
            self.take()
            return Next(self.unary())
        if tok in ("<>", "F"):
            self.take()
            return Eventually(self.unary())
        if tok in ("[]", "G"):
            self.take()
            return Always(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.equiv()
            self.expect(")")
            return f
        if tok == "true":
            self.take()
            return tt()
        if tok == "false":
            self.take()
            return ff()
        if tok is not None and tok not in _KEYWORDS and (tok[0].isalpha() or tok[0] == "_"):
            self.take()
            return atom(tok)
        self.fail("expected a formula")


def parse(text: str) -> Formula:
    """Parse ``text`` into a (not yet normalised) formula tree."""
    return _Parser(text).parse()
