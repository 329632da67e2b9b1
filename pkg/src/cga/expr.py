"""Tokenizer and parser for the calculator language.

Statements are assignments or expressions over numbers, symbols, basis
elements e[i,...,k] and function calls.  The three products *, ^ (outer)
and | (contraction) share one precedence level and associate left; mixing
them in an unparenthesized chain is legal but reported as a warning.
There is no implicit multiplication and no division operator; rationals
like 3/4 are single literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import EINF
from .errors import LexError, ParseError

_OPERATOR_CHARS = "+-*^|=(),;"
_PRODUCT_OPS = ("*", "^", "|")


@dataclass(frozen=True)
class Token:
    kind: str  # number | decimal | ident | basis | op | end
    value: object
    line: int
    column: int


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Decimal:
    text: str


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Basis:
    indices: tuple


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class KwArg:
    name: str
    value: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Assign:
    name: str
    expr: object


def tokenize(source: str) -> list:
    tokens = []
    line, column = 1, 1
    i, n = 0, len(source)

    def error(message):
        raise LexError(message, line, column)

    while i < n:
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            column = 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start_col = column
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            if j < n and source[j] == "/" and j + 1 < n and source[j + 1].isdigit():
                k = j + 1
                while k < n and source[k].isdigit():
                    k += 1
                tokens.append(Token("number", Fraction(source[i:j] + "/" + source[j + 1:k]), line, start_col))
                column += k - i
                i = k
                continue
            if j < n and source[j] == ".":
                k = j + 1
                while k < n and source[k].isdigit():
                    k += 1
                if k < n and source[k] in "eE":
                    m = k + 1
                    if m < n and source[m] in "+-":
                        m += 1
                    if m >= n or not source[m].isdigit():
                        error("malformed exponent in decimal literal")
                    while m < n and source[m].isdigit():
                        m += 1
                    k = m
                tokens.append(Token("decimal", source[i:k], line, start_col))
                column += k - i
                i = k
                continue
            tokens.append(Token("number", Fraction(source[i:j]), line, start_col))
            column += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and source[j].isalnum():
                j += 1
            name = source[i:j]
            if name == "e" and j < n and source[j] == "[":
                indices, j, line, column = _lex_basis(source, j + 1, line, column + (j - i) + 1)
                tokens.append(Token("basis", tuple(indices), line, start_col))
                i = j
                continue
            tokens.append(Token("ident", name, line, start_col))
            column += j - i
            i = j
            continue
        if ch in _OPERATOR_CHARS:
            tokens.append(Token("op", ch, line, start_col))
            i += 1
            column += 1
            continue
        error(f"illegal character {ch!r}")
    tokens.append(Token("end", None, line, column))
    return tokens


def _lex_basis(source, i, line, column):
    """Lex the index list of e[...], starting just past the '['."""
    indices = []
    n = len(source)
    expect_index = True
    while True:
        if i >= n:
            raise LexError("unterminated basis element", line, column)
        ch = source[i]
        if ch.isspace() and ch != "\n":
            i += 1
            column += 1
            continue
        if ch == "]":
            if expect_index and indices:
                raise LexError("trailing comma in basis element", line, column)
            return indices, i + 1, line, column + 1
        if ch == ",":
            if expect_index:
                raise LexError("expected a basis index before ','", line, column)
            expect_index = True
            i += 1
            column += 1
            continue
        if not expect_index:
            raise LexError("expected ',' or ']' in basis element", line, column)
        if ch in "0123":
            indices.append(int(ch))
            i += 1
            column += 1
        elif ch == "∞":
            indices.append(EINF)
            i += 1
            column += 1
        elif source.startswith("inf", i):
            indices.append(EINF)
            i += 3
            column += 3
        else:
            raise LexError(f"invalid basis index {ch!r} (use 0-3, inf or ∞)", line, column)
        expect_index = False


def _describe(tok: Token) -> str:
    if tok.kind == "end":
        return "end of input"
    return repr(tok.value)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0
        self.warnings = []

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.next()
        if tok.kind != "op" or tok.value != op:
            raise ParseError(f"expected '{op}', found {_describe(tok)}", tok.line, tok.column)
        return tok

    def at_op(self, *ops) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value in ops

    def statement(self):
        # Assignment when the statement starts with IDENT '='.
        if (
            self.peek().kind == "ident"
            and self.tokens[self.pos + 1].kind == "op"
            and self.tokens[self.pos + 1].value == "="
        ):
            name = self.next().value
            self.next()
            node = Assign(name, self.expression())
        else:
            node = self.expression()
        suppress = False
        if self.at_op(";"):
            self.next()
            suppress = True
        tail = self.next()
        if tail.kind != "end":
            raise ParseError(f"unexpected {_describe(tail)} after statement", tail.line, tail.column)
        return node, suppress

    def expression(self):
        node = self.product_chain()
        while self.at_op("+", "-"):
            op = self.next().value
            node = BinOp(op, node, self.product_chain())
        return node

    def product_chain(self):
        node = self.unary()
        seen = []
        while self.at_op(*_PRODUCT_OPS):
            tok = self.next()
            seen.append(tok.value)
            node = BinOp(tok.value, node, self.unary())
        if len(set(seen)) > 1:
            self.warnings.append(
                "products mix " + ", ".join(sorted(set(seen)))
                + " without parentheses; grouping left to right"
            )
        return node

    def unary(self):
        if self.at_op("-"):
            self.next()
            return Neg(self.unary())
        return self.atom()

    def atom(self):
        tok = self.next()
        if tok.kind == "number":
            return Number(tok.value)
        if tok.kind == "decimal":
            return Decimal(tok.value)
        if tok.kind == "basis":
            return Basis(tok.value)
        if tok.kind == "ident":
            if self.at_op("("):
                self.next()
                return Call(tok.value, tuple(self.arguments()))
            return Symbol(tok.value)
        if tok.kind == "op" and tok.value == "(":
            node = self.expression()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {_describe(tok)}", tok.line, tok.column)

    def arguments(self):
        args = []
        if self.at_op(")"):
            self.next()
            return args
        while True:
            if (
                self.peek().kind == "ident"
                and self.tokens[self.pos + 1].kind == "op"
                and self.tokens[self.pos + 1].value == "="
            ):
                name = self.next().value
                self.next()
                args.append(KwArg(name, self.expression()))
            else:
                args.append(self.expression())
            if self.at_op(","):
                self.next()
                continue
            self.expect_op(")")
            return args


def parse_statement(source: str):
    """Parse one statement; returns (ast, suppress_output, warnings)."""
    parser = _Parser(tokenize(source))
    node, suppress = parser.statement()
    return node, suppress, parser.warnings


def is_blank(source: str) -> bool:
    """True for lines with nothing but whitespace and comments."""
    return len(tokenize(source)) == 1
