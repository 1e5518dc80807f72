"""Exact arithmetic with grossone: records, sums, partial zeta/eta and integrals."""

from .errors import GrossError
from .expvalue import ExpValue, ev, exp_term
from .numerals import G, GrossNumber, Order, Parity, gross
from .textio import format_value, parse_value

__all__ = [
    "G",
    "ExpValue",
    "GrossError",
    "GrossNumber",
    "Order",
    "Parity",
    "ev",
    "exp_term",
    "format_value",
    "gross",
    "parse_value",
]
