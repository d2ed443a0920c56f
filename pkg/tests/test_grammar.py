from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artschreier.errors import ParseError, UnknownSymbol
from artschreier.gf2f import fq_new
from artschreier.grammar import ls_parse, ls_render, parse_fq, parse_terms

F2, F4, F8 = fq_new(1), fq_new(2), fq_new(3)


def test_spec_literal_over_f4():
    a = ls_parse("x^-3 + g*x^-1 + 1", F4)
    assert a.val == -3
    assert a.terms() == {-3: 1, -1: 0b10, 0: 1}
    assert a.prec == 64


@pytest.mark.parametrize("text", ["0", "x^2 + x^2", "1 + 1", "g + g"])
def test_zero_literals(text):
    assert ls_parse(text, F4).is_zero


@pytest.mark.parametrize(
    "text, terms",
    [
        ("x", {1: 1}),
        ("x^-1", {-1: 1}),
        ("g^2+g*x", {0: 0b11, 1: 0b10}),
        ("(g+1)*x^-5", {-5: 0b11}),
        ("a0", {0: 0b10}),
        ("3*x", {1: 1}),
        ("x^2*x^-3", {-1: 1}),
        ("g^3", {0: 1}),
    ],
)
def test_parse_terms_f4(text, terms):
    assert parse_terms(text, F4) == terms


def test_high_degree_literal_extends_precision():
    assert ls_parse("x^100", F2, prec=16).prec == 101


@pytest.mark.parametrize(
    "text, pos",
    [("x^-1 +", 6), ("x^", 2), ("(x", 2), ("x $ 1", 2), ("g^-1", 2), ("", 0), ("x x", 2)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        ls_parse(text, F4)
    assert info.value.position == pos


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as info:
        ls_parse("x + y", F4)
    assert info.value.position == 4


def test_parse_fq():
    assert parse_fq("g^2+g", F8).bits == 0b110
    with pytest.raises(ParseError):
        parse_fq("x", F8)


@pytest.mark.parametrize(
    "terms, text",
    [
        ({}, "0"),
        ({0: 1}, "1"),
        ({-3: 1, -1: 0b10, 0: 1}, "x^-3 + g*x^-1 + 1"),
        ({-1: 0b11, 2: 0b10}, "(g+1)*x^-1 + g*x^2"),
        ({0: 0b11}, "g+1"),
    ],
)
def test_render(terms, text):
    from artschreier.laurent import LaurentSeries

    assert ls_render(LaurentSeries.from_terms(F4, terms)) == text


@given(st.dictionaries(st.integers(-12, 12), st.integers(1, 7), max_size=8))
def test_render_parse_round_trip(terms):
    from artschreier.laurent import LaurentSeries

    a = LaurentSeries.from_terms(F8, terms)
    assert ls_parse(ls_render(a), F8) == a
