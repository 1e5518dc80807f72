"""Parsing and printing of grossone expressions.

Surface syntax (``G`` is grossone; ``#1`` and ``①`` are accepted too)::

    expr  := term { ("+" | "-") term }
    term  := unary { ("*" | "/") unary | power }     juxtaposition multiplies
    unary := "-" unary | power
    power := atom [ "^" unary ]                      right-associative
    atom  := NUMBER | "G" | NAME | "(" expr ")"

so ``-G^2`` is ``-(G^2)``, ``G^-3`` is ``G^(-3)`` and ``(1/3)G^3`` is
``(1/3)*(G^3)``.  Decimal literals are exact (``0.1`` is ``1/10``).

Two output styles exist: ``record`` prints a positional record that parses
back to the same value, ``machine`` prints canonical JSON.
"""

from __future__ import annotations

import functools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Union

from .errors import ExpressionSyntaxError, NonIntegerGrosspower, UnknownName
from .expvalue import ExpTerm, ExpValue, _growth_cmp, ev, exp_term, raise_power
from .numerals import G, GrossNumber, as_fraction

# -- AST ----------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Grossone:
    pass


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Num, Grossone, Name, Neg, BinOp]

# -- lexer --------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<g>G(?![A-Za-z0-9_])|\#1|①)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


# -- parser -------------------------------------------------------------

_ATOM_START = {"num", "g", "name"}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def expect_op(self, op: str) -> None:
        if not self.at_op(op):
            raise ExpressionSyntaxError(f"expected {op!r}", self.tok.pos)
        self.advance()

    def parse(self) -> Expr:
        if self.tok.kind == "eof":
            raise ExpressionSyntaxError("empty expression", 0)
        node = self.expr()
        if self.tok.kind != "eof":
            raise ExpressionSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            if self.at_op("*", "/"):
                op = self.advance().text
                node = BinOp(op, node, self.unary())
            elif self.tok.kind in _ATOM_START or self.at_op("("):
                node = BinOp("*", node, self.power())
            else:
                return node

    def unary(self) -> Expr:
        if self.at_op("-"):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if not self.at_op("^"):
            return base
        pos = self.advance().pos
        exponent = self.unary()
        if isinstance(base, Grossone):
            literal = _literal_value(exponent)
            if literal is not None and literal.denominator != 1:
                raise NonIntegerGrosspower(f"G^{literal} at position {pos}")
        return BinOp("^", base, exponent)

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(Fraction(t.text))
        if t.kind == "g":
            self.advance()
            return Grossone()
        if t.kind == "name":
            self.advance()
            return Name(t.text)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        if t.kind == "eof":
            raise ExpressionSyntaxError("unexpected end of input", t.pos)
        raise ExpressionSyntaxError(f"unexpected {t.text!r}", t.pos)


def _literal_value(node: Expr) -> Optional[Fraction]:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Neg):
        inner = _literal_value(node.operand)
        return None if inner is None else -inner
    return None


def parse(text: str) -> Expr:
    """Parse expression text into an AST."""
    return _Parser(text).parse()


def evaluate(node: Expr, env: Optional[Mapping[str, ExpValue]] = None) -> ExpValue:
    """Evaluate an AST exactly; ``env`` supplies values for bound names."""
    if isinstance(node, Num):
        return ev(node.value)
    if isinstance(node, Grossone):
        return ev(G)
    if isinstance(node, Name):
        if env is None or node.id not in env:
            raise UnknownName(f"unbound name {node.id!r}")
        return env[node.id]
    if isinstance(node, Neg):
        return -evaluate(node.operand, env)
    left = evaluate(node.left, env)
    right = evaluate(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        return left / right
    return raise_power(left, right)


def parse_value(text: str, env: Optional[Mapping[str, ExpValue]] = None) -> ExpValue:
    """Read either expression text or machine JSON into a value."""
    if text.lstrip().startswith("{"):
        return parse_machine(text)
    return evaluate(parse(text), env)


def parse_gross(text: str) -> GrossNumber:
    return parse_value(text).as_gross()


# -- printing -----------------------------------------------------------


def _multiplicity(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _is_terminating(q: Fraction) -> bool:
    d = q.denominator
    return d == 2 ** _multiplicity(d, 2) * 5 ** _multiplicity(d, 5)


def format_rational(q: Fraction, decimal: bool = True) -> str:
    """``3``, ``0.25``, ``-1/3``: decimals only when they terminate."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    if not decimal or not _is_terminating(q):
        return f"{q.numerator}/{q.denominator}"
    sign = "-" if q < 0 else ""
    a = abs(q)
    places = max(_multiplicity(a.denominator, 2), _multiplicity(a.denominator, 5))
    scaled = a.numerator * (10**places // a.denominator)
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _coefficient_prefix(c: Fraction, decimal: bool) -> str:
    """Magnitude prefix written before ``G`` or a base; empty for 1."""
    if c == 1:
        return ""
    text = format_rational(c, decimal)
    return f"({text})" if "/" in text else text


def _join(pieces: List[tuple]) -> str:
    """Join (sign, magnitude text) pairs as a signed sum."""
    if not pieces:
        return "0"
    out = []
    for i, (negative, text) in enumerate(pieces):
        if i == 0:
            out.append(("-" if negative else "") + text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)


def _gross_pieces(g: GrossNumber, decimal: bool) -> List[tuple]:
    pieces = []
    for p, c in g.terms:
        mag = abs(c)
        if p == 0:
            text = format_rational(mag, decimal)
        else:
            unit = "G" if p == 1 else f"G^{p}"
            text = _coefficient_prefix(mag, decimal) + unit
        pieces.append((c < 0, text))
    return pieces


def format_gross(g: GrossNumber) -> str:
    """Record style; digits print as decimals only if all of them terminate."""
    decimal = all(_is_terminating(c) for _, c in g.terms)
    return _join(_gross_pieces(g, decimal))


def _base_valuation(c: Fraction, base: Fraction) -> int:
    """Largest v with ``c / base^v`` free of further whole factors of base."""
    p, q = base.numerator, base.denominator
    num, den = abs(c.numerator), c.denominator
    v = 0
    while num % p == 0 and den % q == 0:
        num, den, v = num // p, den // q, v + 1
    if v:
        return v
    while num % q == 0 and den % p == 0:
        num, den, v = num // q, den // p, v - 1
    return v


def _display_form(t: ExpTerm) -> tuple:
    v = _base_valuation(t.coeff, t.base)
    return t.coeff / t.base**v, t.exponent + v


def _exp_piece(t: ExpTerm, decimal: bool) -> tuple:
    coeff, exponent = _display_form(t)
    prefix = _coefficient_prefix(abs(coeff), decimal)
    if prefix:
        prefix += "*"
    base = format_rational(t.base)
    if "/" in base or "." in base:
        base = f"({base})"
    power = "G" if exponent == G else f"({format_gross(exponent)})"
    return (coeff < 0, f"{prefix}{base}^{power}")


def format_value(v, style: str = "record") -> str:
    """Print a value as a positional record or as canonical JSON."""
    v = ev(v)
    if style == "machine" or style == "json":
        return format_machine(v)
    if style != "record":
        raise ValueError(f"unknown style {style!r}")
    by_growth = functools.cmp_to_key(_growth_cmp)
    big = sorted((t for t in v.terms if not t.is_infinitesimal), key=by_growth, reverse=True)
    small = sorted((t for t in v.terms if t.is_infinitesimal), key=by_growth, reverse=True)
    digits = [c for _, c in v.gross.terms] + [_display_form(t)[0] for t in v.terms]
    decimal = all(_is_terminating(c) for c in digits)
    pieces = (
        [_exp_piece(t, decimal) for t in big]
        + _gross_pieces(v.gross, decimal)
        + [_exp_piece(t, decimal) for t in small]
    )
    return _join(pieces)


# -- machine JSON -------------------------------------------------------


def _frac_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _gross_json(g: GrossNumber) -> List[Dict[str, str]]:
    return [{"p": str(p), "d": _frac_text(c)} for p, c in g.terms]


def to_machine(v) -> dict:
    v = ev(v)
    return {
        "gross": _gross_json(v.gross),
        "exp": [
            {"c": _frac_text(t.coeff), "b": _frac_text(t.base), "e": _gross_json(t.exponent)}
            for t in v.terms
        ],
    }


def format_machine(v) -> str:
    return json.dumps(to_machine(v), separators=(",", ":"))


def _gross_from_json(items) -> GrossNumber:
    return GrossNumber((int(item["p"]), Fraction(item["d"])) for item in items)


def from_machine(obj: Mapping) -> ExpValue:
    value = ev(_gross_from_json(obj.get("gross", [])))
    for t in obj.get("exp", []):
        value = value + exp_term(Fraction(t["c"]), Fraction(t["b"]), _gross_from_json(t["e"]))
    return value


def parse_machine(text: str) -> ExpValue:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExpressionSyntaxError(f"bad JSON: {exc.msg}", exc.pos) from None
    return from_machine(obj)
