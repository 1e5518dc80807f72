import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from grosscalc.errors import ExpressionSyntaxError, NonIntegerGrosspower, NotExactlyDivisible, UnknownName
from grosscalc.expvalue import ev, exp_term
from grosscalc.numerals import G, GrossNumber
from grosscalc.textio import (
    BinOp,
    Grossone,
    Neg,
    Num,
    evaluate,
    format_rational,
    format_value,
    parse,
    parse_machine,
    parse_value,
    tokenize,
)

from oracles import gross_numbers, random_value


def test_parse_examples():
    assert parse_value("0.5*G^2 + 0.5*G") == ev(G**2 / 2 + G / 2)
    assert parse_value("G/G") == ev(1)
    assert parse_value("3^(G^2+1)") == exp_term(1, 3, G**2 + 1)
    assert parse_value("(G+1)*(G-1)") == ev(G**2 - 1)
    assert parse_value("2^(0-G)") == exp_term(1, 2, -G)
    with pytest.raises(NotExactlyDivisible):
        parse_value("1/(G+1)")


def test_grossone_spellings():
    assert parse_value("#1") == parse_value("①") == parse_value("G") == ev(G)
    assert parse_value("2①^2") == ev(2 * G**2)


def test_precedence():
    assert parse("-G^2") == Neg(BinOp("^", Grossone(), Num(Fraction(2))))
    assert parse_value("-G^2") == ev(-(G**2))
    assert parse_value("2^3^2") == ev(512)
    assert parse_value("G^-3") == ev(G**-3)
    assert parse_value("1-2-3") == ev(-4)
    assert parse_value("12/2/3") == ev(2)
    assert parse_value("(1/3)G^3") == ev(G**3 / 3)
    assert parse_value("0.1") == ev(Fraction(1, 10))


def test_syntax_errors():
    for bad in ["", "1+", "(G", "G)", "2 $ 3", "*3"]:
        with pytest.raises(ExpressionSyntaxError) as info:
            parse(bad)
        assert info.value.code == "SyntaxError"
    with pytest.raises(NonIntegerGrosspower):
        parse("G^0.5")
    with pytest.raises(UnknownName):
        evaluate(parse("a + 1"))
    assert evaluate(parse("a*G"), {"a": ev(3)}) == ev(3 * G)


def test_tokenize_positions():
    toks = tokenize("12 + G")
    assert [(t.kind, t.pos) for t in toks] == [("num", 0), ("op", 3), ("g", 5), ("eof", 6)]


def test_record_format():
    assert format_value(G**2 - 1) == "G^2 - 1"
    assert format_value(0) == "0"
    assert format_value(ev(1) - exp_term(1, 2, -G)) == "1 - 2^(-G)"
    assert format_value(G**2 / 2 + G / 2) == "0.5G^2 + 0.5G"
    assert format_value(G**3 / 3 + G**2 / 2 + G / 6) == "(1/3)G^3 + (1/2)G^2 + (1/6)G"
    assert format_value(exp_term(Fraction(1, 2), 3, G**2 + 1) - Fraction(1, 2)) == "0.5*3^(G^2 + 1) - 0.5"
    assert format_value(-G + G**-2) == "-G + G^-2"


def test_format_rational():
    assert format_rational(Fraction(7, 4)) == "1.75"
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert format_rational(Fraction(-3)) == "-3"


def test_machine_format():
    v = exp_term(Fraction(3, 2), 3, G**2) - Fraction(1, 2)
    obj = json.loads(format_value(v, "json"))
    assert obj == {
        "gross": [{"p": "0", "d": "-1/2"}],
        "exp": [{"c": "3/2", "b": "3/1", "e": [{"p": "2", "d": "1/1"}]}],
    }
    assert parse_machine(format_value(v, "json")) == v
    with pytest.raises(ExpressionSyntaxError):
        parse_machine("{bad")


@settings(max_examples=300)
@given(gross_numbers)
def test_gross_round_trip(g):
    assert parse_value(format_value(g)) == ev(g)
    assert parse_value(format_value(g, "json")) == ev(g)


def test_value_round_trip():
    rng = random.Random(11)
    for _ in range(500):
        v = random_value(rng)
        assert parse_value(format_value(v)) == v, format_value(v)
        assert parse_value(format_value(v, "json")) == v
