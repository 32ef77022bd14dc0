"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive):

    expr   := term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := base ('^' nat)?
    base   := rational | var | '(' expr ')' | '-' factor

Multiplication by juxtaposition is allowed (``XY``, ``X^3(Y+Z)^5``) and
exponents bind tighter than juxtaposition, so ``X^3(Y+Z)^5`` is
``(X^3)*((Y+Z)^5)``.  Rational literals may be written ``3`` or ``3/4``.

Identifiers are a single letter optionally followed by digits.  They are
resolved against the declared variable table by longest match, first
case-sensitively and then case-insensitively, so a table ``(X, Y, Z)``
accepts ``y`` as well; this mirrors using one alphabet for the polynomial
ring and the operator ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .multipoly import LinearForm, Polynomial

_IDENT_START = tuple("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")


@dataclass(frozen=True)
class VarTable:
    """Ordered, distinct variable names; order fixes lex precedence."""

    names: tuple[str, ...]

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise DomainError("variable table must not be empty")
        for name in names:
            if not (name and name[0] in _IDENT_START and (not name[1:] or name[1:].isdigit())):
                raise DomainError(f"invalid variable name {name!r}: expected a letter optionally followed by digits")
        lowered = [n.lower() for n in names]
        if len(set(lowered)) != len(lowered):
            raise DomainError("variable names must be distinct (case-insensitively)")
        object.__setattr__(self, "names", names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int | None:
        try:
            return self.names.index(name)
        except ValueError:
            lowered = name.lower()
            for i, n in enumerate(self.names):
                if n.lower() == lowered:
                    return i
        return None


def infer_vars(*texts: str) -> VarTable:
    """Variable table from identifiers in order of first occurrence."""
    names: list[str] = []
    seen: set[str] = set()
    for text in texts:
        i = 0
        while i < len(text):
            ch = text[i]
            if ch in _IDENT_START:
                j = i + 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                lexeme = text[i:j]
                if lexeme.lower() not in seen:
                    seen.add(lexeme.lower())
                    names.append(lexeme)
                i = j
            else:
                i += 1
    if not names:
        raise DomainError("no variables found in input")
    return VarTable(names)


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind: str, value, pos: int):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str, table: VarTable) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            # a slash immediately after an integer makes a rational literal
            if j < n and text[j] == "/":
                k = j + 1
                if k >= n or not text[k].isdigit():
                    raise ParseError("expected digits after '/' in rational literal", j)
                m = k
                while m < n and text[m].isdigit():
                    m += 1
                den = int(text[k:m])
                if den == 0:
                    raise ParseError("zero denominator in rational literal", k)
                tokens.append(_Token("number", Fraction(num, den), i))
                i = m
            else:
                tokens.append(_Token("number", Fraction(num), i))
                i = j
            continue
        if ch in _IDENT_START:
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            lexeme = text[i:j]
            # longest declared prefix wins; lets x12 mean x1*2 when only x1 is declared
            for end in range(len(lexeme), 0, -1):
                index = table.index_of(lexeme[:end])
                if index is not None:
                    tokens.append(_Token("var", index, i))
                    i += end
                    break
            else:
                raise ParseError(f"unknown identifier {lexeme!r}", i)
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], nvars: int):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.pos)
        return self.take()

    def parse_expr(self) -> Polynomial:
        result = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.parse_term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.take()
                result = result * self.parse_factor()
            elif kind in ("number", "var", "("):
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        if self.peek().kind == "^":
            self.take()
            tok = self.peek()
            if tok.kind == "-":
                raise ParseError("negative exponent", tok.pos)
            if tok.kind != "number":
                raise ParseError("expected an integer exponent after '^'", tok.pos)
            self.take()
            if tok.value.denominator != 1:
                raise ParseError("exponent must be an integer", tok.pos)
            return base ** int(tok.value)
        return base

    def parse_base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            return Polynomial.constant(self.nvars, tok.value)
        if tok.kind == "var":
            self.take()
            return Polynomial.variable(self.nvars, tok.value)
        if tok.kind == "(":
            self.take()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if tok.kind == "-":
            self.take()
            return -self.parse_factor()
        raise ParseError(f"unexpected token {tok.kind!r}", tok.pos)


def parse_poly(text: str, table: VarTable) -> Polynomial:
    """Parse an expression into a fully expanded polynomial."""
    if not text.strip():
        raise ParseError("empty input", 0)
    parser = _Parser(_tokenize(text, table), table.nvars)
    result = parser.parse_expr()
    end = parser.peek()
    if end.kind != "end":
        raise ParseError(f"unexpected trailing token {end.kind!r}", end.pos)
    return result


def parse_linear_form(text: str, table: VarTable) -> LinearForm:
    """Parse a degree-one expression; rejects zero and non-linear input."""
    poly = parse_poly(text, table)
    if poly.is_zero():
        raise DomainError("linear form is zero")
    if poly.degree() != 1 or any(sum(e) != 1 for e in poly.terms):
        raise DomainError(f"not a linear form: {text!r}")
    coeffs = [Fraction(0)] * table.nvars
    for exps, coeff in poly.terms.items():
        coeffs[exps.index(1)] = coeff
    return LinearForm(coeffs)
