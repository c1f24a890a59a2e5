"""Text parser for group presentations.

Grammar (whitespace-insensitive)::

    presentation := '<' [genlist] '|' [rellist] '>'
    genlist      := ident (',' ident)*
    rellist      := relator (',' relator)*
    relator      := word | word '=' word
    word         := '1' | factor ('*' factor)*
    factor       := ident ['^' integer] | '(' word ')' ['^' integer]
                  | '[' word ',' word ']'

Parentheses and brackets nest at most MAX_NESTING levels deep.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .types import (
    DuplicateGeneratorError,
    Presentation,
    PresentationSyntaxError,
    UndeclaredGeneratorError,
    Word,
)
from .words import commutator, concat, inverse, letter, power

MAX_NESTING = 200

_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<sym>[<>|,=*^()\[\]]))"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise PresentationSyntaxError(f"Unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup or "sym"
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", end))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.gens: dict[str, int] = {}
        self.depth = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind == "sym" and self.tok.text == text

    def expect(self, text: str) -> _Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise PresentationSyntaxError(f"Expected '{text}', found '{found}'", self.tok.pos)
        tok = self.tok
        self.i += 1
        return tok

    def presentation(self) -> Presentation:
        self.expect("<")
        names: list[str] = []
        if not self.at("|"):
            names.append(self.ident())
            while self.at(","):
                self.i += 1
                names.append(self.ident())
        for name in names:
            if name in self.gens:
                raise DuplicateGeneratorError(name)
            self.gens[name] = len(self.gens)
        self.expect("|")

        relators: list[Word] = []
        if not self.at(">"):
            relators.append(self.relator())
            while self.at(","):
                self.i += 1
                relators.append(self.relator())
        self.expect(">")
        if self.tok.kind != "end":
            raise PresentationSyntaxError(f"Trailing input '{self.tok.text}'", self.tok.pos)
        return Presentation(tuple(names), tuple(relators))

    def ident(self) -> str:
        if self.tok.kind != "ident":
            raise PresentationSyntaxError(
                f"Expected generator name, found '{self.tok.text or 'end of input'}'", self.tok.pos
            )
        name = self.tok.text
        self.i += 1
        return name

    def integer(self) -> int:
        if self.tok.kind != "int":
            raise PresentationSyntaxError(
                f"Expected integer, found '{self.tok.text or 'end of input'}'", self.tok.pos
            )
        value = int(self.tok.text)
        self.i += 1
        return value

    def relator(self) -> Word:
        lhs = self.word()
        if self.at("="):
            self.i += 1
            return concat(lhs, inverse(self.word()))
        return lhs

    def word(self) -> Word:
        if self.tok.kind == "int" and self.tok.text == "1":
            self.i += 1
            return Word()
        parts = [self.factor()]
        while self.at("*"):
            self.i += 1
            parts.append(self.factor())
        return concat(*parts)

    def exponent(self) -> int:
        if self.at("^"):
            self.i += 1
            return self.integer()
        return 1

    def enter(self, tok: _Token) -> None:
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise PresentationSyntaxError(f"Nesting deeper than {MAX_NESTING} levels", tok.pos)

    def factor(self) -> Word:
        tok = self.tok
        if tok.kind == "ident":
            self.i += 1
            if tok.text not in self.gens:
                raise UndeclaredGeneratorError(tok.text, tok.pos)
            return letter(self.gens[tok.text], self.exponent())
        if self.at("("):
            self.i += 1
            self.enter(tok)
            inner = self.word()
            self.expect(")")
            self.depth -= 1
            return power(inner, self.exponent())
        if self.at("["):
            self.i += 1
            self.enter(tok)
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            self.depth -= 1
            return commutator(u, v)
        raise PresentationSyntaxError(
            f"Expected generator, '(' or '[', found '{tok.text or 'end of input'}'", tok.pos
        )


def parse_presentation(text: str) -> Presentation:
    return _Parser(text).presentation()


def parse_word(text: str, generators: tuple[str, ...] | list[str]) -> Word:
    """Parse a single word over an existing generator list."""
    parser = _Parser(text)
    parser.gens = {name: i for i, name in enumerate(generators)}
    w = parser.word()
    if parser.tok.kind != "end":
        raise PresentationSyntaxError(f"Trailing input '{parser.tok.text}'", parser.tok.pos)
    return w
