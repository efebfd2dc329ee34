"""Immutable expression trees for symbolic arithmetic.

`Sum` and `Product` always hold at least two operands (singletons collapse
to the operand itself) and unary negation is spelled
``Product(IntegerLit(-1), operand)``; there is no dedicated negation node.
Nodes built by the text parser carry a source span (byte offsets into the
input); spans never participate in equality, so structural comparison works
across differently sourced trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Union

Span = tuple[int, int]


def _span_field():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IntegerLit:
    value: int
    span: Span | None = _span_field()


@dataclass(frozen=True)
class RationalLit:
    numerator: int
    denominator: int
    span: Span | None = _span_field()

    def __post_init__(self):
        # Kept in lowest terms with a positive denominator.
        if self.denominator == 0:
            raise ValueError("rational literal with zero denominator")
        g = gcd(self.numerator, self.denominator)
        num, den = self.numerator // g, self.denominator // g
        if den < 0:
            num, den = -num, -den
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)


@dataclass(frozen=True)
class SymbolRef:
    name: str
    span: Span | None = _span_field()


@dataclass(frozen=True)
class Sum:
    terms: tuple[Expr, ...]
    span: Span | None = _span_field()

    def __post_init__(self):
        if len(self.terms) < 2:
            raise ValueError("Sum requires at least two terms")


@dataclass(frozen=True)
class Product:
    factors: tuple[Expr, ...]
    span: Span | None = _span_field()

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("Product requires at least two factors")


@dataclass(frozen=True)
class Power:
    base: Expr
    exponent: Expr
    span: Span | None = _span_field()


@dataclass(frozen=True)
class Quotient:
    numerator: Expr
    denominator: Expr
    span: Span | None = _span_field()


Expr = Union[IntegerLit, RationalLit, SymbolRef, Sum, Product, Power, Quotient]

# Simultaneous symbol-substitution rules, the rule-replacement analog.
RenameMap = Mapping[str, Expr]


def make_sum(terms: Iterable[Expr], span: Span | None = None) -> Expr:
    """Build a Sum, collapsing a singleton to its sole element."""
    items = tuple(terms)
    if not items:
        raise ValueError("empty sum")
    if len(items) == 1:
        return items[0]
    return Sum(items, span)


def make_product(factors: Iterable[Expr], span: Span | None = None) -> Expr:
    """Build a Product, collapsing a singleton to its sole element."""
    items = tuple(factors)
    if not items:
        raise ValueError("empty product")
    if len(items) == 1:
        return items[0]
    return Product(items, span)


def negate(e: Expr, span: Span | None = None) -> Expr:
    return Product((IntegerLit(-1), e), span)


def symbols_of(e: Expr) -> set[str]:
    """All symbol names occurring anywhere in the expression."""
    out: set[str] = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, SymbolRef):
            out.add(node.name)
        elif isinstance(node, Sum):
            stack.extend(node.terms)
        elif isinstance(node, Product):
            stack.extend(node.factors)
        elif isinstance(node, Power):
            stack.append(node.base)
            stack.append(node.exponent)
        elif isinstance(node, Quotient):
            stack.append(node.numerator)
            stack.append(node.denominator)
    return out


def substitute(e: Expr, rules: RenameMap) -> Expr:
    """Replace symbols by mapped expressions, simultaneously, in one pass.

    Rule outputs are never re-rewritten, so ``{x: y, y: x}`` swaps the two
    symbols. Subtrees that contain no rule key are returned as-is, which
    makes substitution with an empty map the identity (same object).
    """
    if not rules:
        return e
    return _substitute(e, rules)


def _substitute(e: Expr, rules: RenameMap) -> Expr:
    if isinstance(e, SymbolRef):
        return rules.get(e.name, e)
    if isinstance(e, Sum):
        terms = tuple(_substitute(t, rules) for t in e.terms)
        if all(a is b for a, b in zip(terms, e.terms)):
            return e
        return Sum(terms, e.span)
    if isinstance(e, Product):
        factors = tuple(_substitute(f, rules) for f in e.factors)
        if all(a is b for a, b in zip(factors, e.factors)):
            return e
        return Product(factors, e.span)
    if isinstance(e, Power):
        base = _substitute(e.base, rules)
        exponent = _substitute(e.exponent, rules)
        if base is e.base and exponent is e.exponent:
            return e
        return Power(base, exponent, e.span)
    if isinstance(e, Quotient):
        num = _substitute(e.numerator, rules)
        den = _substitute(e.denominator, rules)
        if num is e.numerator and den is e.denominator:
            return e
        return Quotient(num, den, e.span)
    return e
