"""Recursive-descent parser for hybrid-element expressions.

Grammar (whitespace insignificant, scalars multiply atoms on the left):

    element    := ['-'] term (('+'|'-') term)*
    term       := scalar ['*' atom] | atom
    atom       := '1' | 'g' | 'mu' | 'nu' | '(' element ')'
    scalar     := sfactor (('*'|'/') sfactor)*
    sfactor    := integer | 'i' | 'b' | sfactor '^' integer | '(' scalarexpr ')'
    scalarexpr := ['-'] scalar (('+'|'-') scalar)*

The optional leading '-' does not appear in the printed grammar of the
element language but is required to read back negative leading coefficients
that the displays produce.  Unicode mu/nu are accepted as aliases on input;
ASCII is canonical on output.  Expressions are evaluated while parsing, so
the result is a HybridElement directly; a zero scalar divisor raises
DivisionByZero during that evaluation.
"""

from __future__ import annotations

from .errors import ParseError
from .hybrid import BasisIndex, HybridElement
from .scalar import B, GaussianRational, I, Scalar, as_constant

_ATOMS = {
    "1": BasisIndex.ONE,
    "g": BasisIndex.G,
    "mu": BasisIndex.MU,
    "nu": BasisIndex.NU,
}
_WORD_ALIASES = {"μ": "mu", "ν": "nu"}
_WORDS = {"i", "b", "g", "mu", "nu"}
_OPS = "+-*/^()"


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind  # "int" | "word" | one of _OPS | "end"
        self.text = text
        self.pos = pos


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    idx = 0
    n = len(src)
    while idx < n:
        ch = src[idx]
        if ch.isspace():
            idx += 1
            continue
        if ch.isdigit():
            start = idx
            while idx < n and src[idx].isdigit():
                idx += 1
            tokens.append(_Token("int", src[start:idx], start))
            continue
        if ch.isalpha():
            start = idx
            while idx < n and src[idx].isalpha():
                idx += 1
            word = src[start:idx]
            word = _WORD_ALIASES.get(word, word)
            if word not in _WORDS:
                raise ParseError(f"unknown symbol {word!r}", start, ("i", "b", "g", "mu", "nu"))
            tokens.append(_Token("word", word, start))
            continue
        if ch in _OPS:
            tokens.append(_Token(ch, ch, idx))
            idx += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", idx)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def accept(self, kind) -> _Token | None:
        tok = self.tokens[self.pos]
        if tok.kind == kind:
            self.pos += 1
            return tok
        return None

    def expect(self, kind, expected) -> _Token:
        tok = self.accept(kind)
        if tok is None:
            cur = self.peek()
            raise ParseError(
                f"expected {expected}, got {cur.text or 'end of input'!r}",
                cur.pos,
                (expected,) if isinstance(expected, str) else tuple(expected),
            )
        return tok

    # scalar layer -----------------------------------------------------

    def sfactor(self) -> Scalar:
        tok = self.peek()
        if tok.kind == "int":
            self.pos += 1
            value = Scalar(int(tok.text))
        elif tok.kind == "word" and tok.text == "i":
            self.pos += 1
            value = I
        elif tok.kind == "word" and tok.text == "b":
            self.pos += 1
            value = B
        elif tok.kind == "(":
            self.pos += 1
            value = self.scalarexpr()
            self.expect(")", ")")
        else:
            raise ParseError(
                f"expected a scalar factor, got {tok.text or 'end of input'!r}",
                tok.pos,
                ("integer", "i", "b", "("),
            )
        while self.accept("^"):
            exp = self.expect("int", "integer exponent")
            value = value ** int(exp.text)
        return value

    def scalar(self) -> Scalar:
        value = self.sfactor()
        while True:
            if self.peek().kind == "*":
                mark = self.pos
                self.pos += 1
                try:
                    value = value * self.sfactor()
                except ParseError:
                    self.pos = mark  # the '*' belongs to 'scalar * atom'
                    break
            elif self.accept("/"):
                value = value / self.sfactor()
            else:
                break
        return value

    def scalarexpr(self) -> Scalar:
        negative = self.accept("-") is not None
        value = self.scalar()
        if negative:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.scalar()
            elif self.accept("-"):
                value = value - self.scalar()
            else:
                break
        return value

    # element layer ----------------------------------------------------

    def atom(self) -> HybridElement:
        tok = self.peek()
        if tok.kind == "word" and tok.text in _ATOMS:
            self.pos += 1
            return HybridElement.basis(_ATOMS[tok.text])
        if tok.kind == "int" and tok.text == "1":
            self.pos += 1
            return HybridElement.basis(BasisIndex.ONE)
        if tok.kind == "(":
            self.pos += 1
            value = self.element()
            self.expect(")", ")")
            return value
        raise ParseError(
            f"expected an atom, got {tok.text or 'end of input'!r}",
            tok.pos,
            ("1", "g", "mu", "nu", "("),
        )

    def term(self) -> HybridElement:
        tok = self.peek()
        if tok.kind == "word" and tok.text in ("g", "mu", "nu"):
            return self.atom()
        mark = self.pos
        try:
            coeff = self.scalar()
        except ParseError:
            self.pos = mark
            return self.atom()
        if self.accept("*"):
            return self.atom().scale(coeff)
        return HybridElement.basis(BasisIndex.ONE).scale(coeff)

    def element(self) -> HybridElement:
        negative = self.accept("-") is not None
        value = self.term()
        if negative:
            value = -value
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                break
        return value


def parse_element(src: str) -> HybridElement:
    """Parse and evaluate an element expression."""
    parser = _Parser(src)
    value = parser.element()
    end = parser.peek()
    if end.kind != "end":
        raise ParseError(
            f"unexpected trailing input {end.text!r}", end.pos, ("+", "-", "end")
        )
    return value


def parse_gaussian(src: str) -> GaussianRational:
    """Parse a constant scalar expression, e.g. a value for the parameter b."""
    parser = _Parser(src)
    value = parser.scalarexpr()
    end = parser.peek()
    if end.kind != "end":
        raise ParseError(
            f"unexpected trailing input {end.text!r}", end.pos, ("+", "-", "end")
        )
    constant = as_constant(value)
    if constant is None:
        raise ParseError("expected a constant (b is not allowed here)", 0)
    return constant
