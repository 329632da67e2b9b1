"""Tokenizer and parser behavior, including positions and warnings."""

from fractions import Fraction

import pytest

from cga import LexError, ParseError
from cga.expr import (
    Assign,
    Basis,
    BinOp,
    Call,
    Decimal,
    KwArg,
    Neg,
    Number,
    Symbol,
    parse_statement,
    tokenize,
)


def kinds(source):
    return [(t.kind, t.value) for t in tokenize(source)[:-1]]


def parse(source):
    node, _, _ = parse_statement(source)
    return node


# -- tokenizer ----------------------------------------------------------------


def test_basis_group_is_one_token():
    assert kinds("e[2,1]") == [("basis", (2, 1))]


def test_tokenize_expression():
    assert kinds("a*e[1] + e[0,inf]") == [
        ("ident", "a"),
        ("op", "*"),
        ("basis", (1,)),
        ("op", "+"),
        ("basis", (0, 4)),
    ]


def test_rational_literal_is_one_token():
    assert kinds("3/4") == [("number", Fraction(3, 4))]


def test_decimal_literal():
    assert kinds("1.5e-3") == [("decimal", "1.5e-3")]


def test_infinity_spellings():
    assert kinds("e[∞]") == [("basis", (4,))]
    assert kinds("e[inf]") == [("basis", (4,))]


def test_empty_basis_token():
    assert kinds("e[]") == [("basis", ())]


def test_plain_e_is_an_identifier():
    assert kinds("e + e2") == [("ident", "e"), ("op", "+"), ("ident", "e2")]


def test_comments_are_skipped():
    assert kinds("1 # trailing words\n") == [("number", Fraction(1))]


def test_illegal_character_reports_position():
    with pytest.raises(LexError) as err:
        tokenize("1 + $")
    assert err.value.line == 1
    assert err.value.column == 5


def test_bad_basis_index():
    with pytest.raises(LexError):
        tokenize("e[7]")
    with pytest.raises(LexError):
        tokenize("e[1,]")
    with pytest.raises(LexError):
        tokenize("e[1")


# -- parser -------------------------------------------------------------------


def test_assignment_node():
    node = parse("p = e[0] + X")
    assert isinstance(node, Assign)
    assert node.name == "p"
    assert isinstance(node.expr, BinOp)


def test_products_share_one_level_left_assoc_with_warning():
    node, _, warnings = parse_statement("a^b|c")
    assert node == BinOp("|", BinOp("^", Symbol("a"), Symbol("b")), Symbol("c"))
    assert len(warnings) == 1
    assert "left to right" in warnings[0]


def test_uniform_product_chain_has_no_warning():
    _, _, warnings = parse_statement("a*b*c")
    assert warnings == []


def test_function_call():
    assert parse("dual(P)") == Call("dual", (Symbol("P"),))


def test_call_with_bindings():
    node = parse("subst(A, x1=1, y1=-1)")
    assert node == Call(
        "subst",
        (
            Symbol("A"),
            KwArg("x1", Number(Fraction(1))),
            KwArg("y1", Neg(Number(Fraction(1)))),
        ),
    )


def test_products_bind_tighter_than_sums():
    node = parse("1 + 2*3")
    assert node == BinOp("+", Number(Fraction(1)), BinOp("*", Number(Fraction(2)), Number(Fraction(3))))


def test_unary_minus_binds_tighter_than_products():
    node = parse("-a*b")
    assert node == BinOp("*", Neg(Symbol("a")), Symbol("b"))


def test_trailing_semicolon_suppresses():
    _, suppressed, _ = parse_statement("x = 1;")
    assert suppressed
    _, suppressed, _ = parse_statement("x = 1")
    assert not suppressed


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_statement("1 + ")
    assert "end of input" in str(err.value)


def test_leftover_tokens_rejected():
    with pytest.raises(ParseError):
        parse_statement("1 2")


def test_missing_closing_paren():
    with pytest.raises(ParseError):
        parse_statement("f(1")
    with pytest.raises(ParseError):
        parse_statement("(1 + 2")


def test_juxtaposition_is_rejected():
    with pytest.raises(ParseError):
        parse_statement("x1 x2")


def test_nested_calls_and_parens():
    node = parse("gp(rev(A), (B + C))")
    assert node == Call("gp", (Call("rev", (Symbol("A"),)), BinOp("+", Symbol("B"), Symbol("C"))))
