"""Exact multivariate rational-function arithmetic over the rationals.

Representation. A polynomial maps monomials to nonzero Fraction
coefficients, where a monomial is an exponent tuple aligned with the
polynomial's symbol table (symbol names sorted lexicographically by code
point). Monomials compare under pure lexicographic order on exponent
vectors; term dicts are stored in descending monomial order so iteration
and emission are deterministic.

Canonical rational functions additionally guarantee: the symbol table is
trimmed to symbols that actually occur, any monomial dividing every term
of both numerator and denominator is cancelled, all coefficients are
integers with unit content across the pair, and the denominator's leading
coefficient is positive. Full multivariate GCD reduction is deliberately
not performed; semantic equality is decided by cross-multiplication
(`ratfunc_equal`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Union

from .expr import (
    Expr,
    IntegerLit,
    Power,
    Product,
    Quotient,
    RationalLit,
    Span,
    Sum,
    SymbolRef,
    symbols_of,
)
from .expr import substitute  # noqa: F401  (core operation, re-exported here)

Monomial = tuple[int, ...]
SymbolTable = tuple[str, ...]


class AlgebraError(Exception):
    """Base class for exact-arithmetic failures; may carry a source span."""

    def __init__(self, message: str, span: Span | None = None):
        super().__init__(message)
        self.span = span


class SymbolicExponent(AlgebraError):
    """An exponent did not normalize to an integer constant."""


class ZeroDenominator(AlgebraError):
    """A denominator normalized to the zero polynomial."""


class NotPolynomialInVar(AlgebraError):
    """The main variable occurs in a denominator."""


class UnboundSymbol(AlgebraError):
    """Point evaluation hit a symbol missing from the assignment."""


class DivisionByZeroAtPoint(AlgebraError):
    """Point evaluation hit a zero denominator."""


@dataclass(frozen=True)
class MultiPoly:
    """Sparse multivariate polynomial with Fraction coefficients.

    `terms` holds no zero coefficients and iterates in descending monomial
    order. All arithmetic assumes both operands share the same symbol
    table; use `merge_tables`/`remap` to align values first.
    """

    symbols: SymbolTable
    terms: dict[Monomial, Fraction]

    @staticmethod
    def make(symbols: SymbolTable, raw: Mapping[Monomial, Fraction]) -> MultiPoly:
        items = [(m, c) for m, c in raw.items() if c != 0]
        items.sort(reverse=True)
        return MultiPoly(symbols, dict(items))

    @classmethod
    def zero(cls, symbols: SymbolTable = ()) -> MultiPoly:
        return cls(symbols, {})

    @classmethod
    def const(cls, symbols: SymbolTable, value: Fraction | int) -> MultiPoly:
        value = Fraction(value)
        if value == 0:
            return cls(symbols, {})
        return cls(symbols, {(0,) * len(symbols): value})

    @classmethod
    def variable(cls, symbols: SymbolTable, name: str) -> MultiPoly:
        exps = [0] * len(symbols)
        exps[symbols.index(name)] = 1
        return cls(symbols, {tuple(exps): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in mono) for mono in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.symbols), Fraction(0))

    def leading(self) -> tuple[Monomial, Fraction]:
        return next(iter(self.terms.items()))

    def degree_in(self, name: str) -> int:
        if name not in self.symbols or not self.terms:
            return 0
        i = self.symbols.index(name)
        return max(mono[i] for mono in self.terms)

    def used_symbols(self) -> set[str]:
        used: set[str] = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(self.symbols[i])
        return used

    def __add__(self, other: MultiPoly) -> MultiPoly:
        assert self.symbols == other.symbols
        out = dict(self.terms)
        for mono, c in other.terms.items():
            acc = out.get(mono, Fraction(0)) + c
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return MultiPoly.make(self.symbols, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.symbols, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        assert self.symbols == other.symbols
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                acc = out.get(key, Fraction(0)) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        return MultiPoly.make(self.symbols, out)

    def pow_int(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative exponent on a polynomial")
        result = MultiPoly.const(self.symbols, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        for name in self.symbols:
            if name not in point:
                raise UnboundSymbol(f"no value assigned to symbol '{name}'")
        values = [Fraction(point[name]) for name in self.symbols]
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(values, mono):
                if e:
                    term *= v**e
            total += term
        return total


def merge_tables(a: SymbolTable, b: SymbolTable) -> SymbolTable:
    return tuple(sorted(set(a) | set(b)))


def remap(p: MultiPoly, symbols: SymbolTable) -> MultiPoly:
    """Re-express `p` over a superset symbol table."""
    if p.symbols == symbols:
        return p
    positions = [symbols.index(name) for name in p.symbols]
    width = len(symbols)
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.terms.items():
        exps = [0] * width
        for pos, e in zip(positions, mono):
            exps[pos] = e
        out[tuple(exps)] = c
    return MultiPoly.make(symbols, out)


@dataclass(frozen=True)
class RatFunc:
    """Canonical exact rational function (see module docstring)."""

    numerator: MultiPoly
    denominator: MultiPoly

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_constant(self) -> bool:
        return self.numerator.is_constant() and self.denominator.is_constant()

    def constant_value(self) -> Fraction:
        return self.numerator.constant_value() / self.denominator.constant_value()


RATFUNC_ZERO = RatFunc(MultiPoly((), {}), MultiPoly((), {(): Fraction(1)}))
RATFUNC_ONE = RatFunc(MultiPoly((), {(): Fraction(1)}), MultiPoly((), {(): Fraction(1)}))


def make_ratfunc(num: MultiPoly, den: MultiPoly, span: Span | None = None) -> RatFunc:
    """Canonicalize a numerator/denominator pair into a RatFunc."""
    if den.is_zero():
        raise ZeroDenominator("denominator is identically zero", span)
    if num.is_zero():
        return RATFUNC_ZERO
    num, den = _cancel_common_monomial(num, den)
    num, den = _trim_pair(num, den)

    scale = Fraction(
        lcm(*(c.denominator for c in num.terms.values()),
            *(c.denominator for c in den.terms.values()))
    )
    content = gcd(
        *(int(c * scale) for c in num.terms.values()),
        *(int(c * scale) for c in den.terms.values()),
    )
    scale /= content
    if den.terms[max(den.terms)] * scale < 0:
        scale = -scale
    if scale != 1:
        num = MultiPoly(num.symbols, {m: c * scale for m, c in num.terms.items()})
        den = MultiPoly(den.symbols, {m: c * scale for m, c in den.terms.items()})
    return RatFunc(num, den)


def _trim_pair(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    used = [
        i
        for i in range(len(num.symbols))
        if any(m[i] for m in num.terms) or any(m[i] for m in den.terms)
    ]
    if len(used) == len(num.symbols):
        return num, den
    symbols = tuple(num.symbols[i] for i in used)

    def project(p: MultiPoly) -> MultiPoly:
        out = {tuple(m[i] for i in used): c for m, c in p.terms.items()}
        return MultiPoly.make(symbols, out)

    return project(num), project(den)


def _cancel_common_monomial(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    width = len(num.symbols)
    if width == 0:
        return num, den
    mins = [None] * width
    for p in (num, den):
        for mono in p.terms:
            if mins[0] is None:
                mins = list(mono)
            else:
                mins = [min(a, b) for a, b in zip(mins, mono)]
    if not any(mins):
        return num, den

    def shift(p: MultiPoly) -> MultiPoly:
        out = {
            tuple(e - g for e, g in zip(mono, mins)): c for mono, c in p.terms.items()
        }
        return MultiPoly.make(p.symbols, out)

    return shift(num), shift(den)


def normalize(e: Expr) -> RatFunc:
    """Flatten an expression into canonical rational-function form.

    Every Power exponent must normalize to an integer constant; negative
    exponents contribute to the denominator and Quotient nodes merge by
    cross-multiplication.
    """
    table = tuple(sorted(symbols_of(e)))
    num, den = _to_num_den(e, table)
    return make_ratfunc(num, den, span=getattr(e, "span", None))


def _to_num_den(e: Expr, table: SymbolTable) -> tuple[MultiPoly, MultiPoly]:
    one = MultiPoly.const(table, 1)
    if isinstance(e, IntegerLit):
        return MultiPoly.const(table, e.value), one
    if isinstance(e, RationalLit):
        return MultiPoly.const(table, e.numerator), MultiPoly.const(table, e.denominator)
    if isinstance(e, SymbolRef):
        return MultiPoly.variable(table, e.name), one
    if isinstance(e, Sum):
        num, den = _to_num_den(e.terms[0], table)
        for term in e.terms[1:]:
            tn, td = _to_num_den(term, table)
            num = num * td + tn * den
            den = den * td
        return num, den
    if isinstance(e, Product):
        num, den = _to_num_den(e.factors[0], table)
        for factor in e.factors[1:]:
            fn, fd = _to_num_den(factor, table)
            num = num * fn
            den = den * fd
        return num, den
    if isinstance(e, Quotient):
        num, den = _to_num_den(e.numerator, table)
        dn, dd = _to_num_den(e.denominator, table)
        if dn.is_zero():
            raise ZeroDenominator(
                "denominator is identically zero",
                getattr(e.denominator, "span", None) or e.span,
            )
        return num * dd, den * dn
    if isinstance(e, Power):
        en, ed = _to_num_den(e.exponent, table)
        k = _integer_constant(en, ed)
        if k is None:
            raise SymbolicExponent(
                "exponent does not normalize to an integer constant",
                getattr(e.exponent, "span", None) or e.span,
            )
        bn, bd = _to_num_den(e.base, table)
        if k >= 0:
            return bn.pow_int(k), bd.pow_int(k)
        if bn.is_zero():
            raise ZeroDenominator(
                "zero raised to a negative power",
                getattr(e.base, "span", None) or e.span,
            )
        return bd.pow_int(-k), bn.pow_int(-k)
    raise TypeError(f"not an expression node: {e!r}")


def _integer_constant(num: MultiPoly, den: MultiPoly) -> int | None:
    if not (num.is_constant() and den.is_constant()):
        return None
    value = num.constant_value() / den.constant_value()
    return int(value) if value.denominator == 1 else None


def ratfunc_equal(a: RatFunc, b: RatFunc) -> bool:
    """Exact equality by cross-multiplication (no GCD reduction needed)."""
    table = merge_tables(a.numerator.symbols, b.numerator.symbols)
    left = remap(a.numerator, table) * remap(b.denominator, table)
    right = remap(b.numerator, table) * remap(a.denominator, table)
    return left.terms == right.terms


def _normalized_in_var(e: Expr, var: str) -> RatFunc:
    r = normalize(e)
    if r.denominator.degree_in(var) > 0:
        raise NotPolynomialInVar(
            f"denominator contains the main variable '{var}'"
        )
    return r


def degree_in(e: Expr, var: str) -> int:
    """Largest power of `var` with a nonzero coefficient (0 for constants)."""
    r = _normalized_in_var(e, var)
    return r.numerator.degree_in(var)


def _var_coefficients(r: RatFunc, var: str) -> tuple[RatFunc, ...]:
    """Split a var-free-denominator RatFunc into coefficients of var^k."""
    num, den = r.numerator, r.denominator
    if var not in num.symbols:
        return (r,)
    vi = num.symbols.index(var)
    reduced = tuple(s for s in num.symbols if s != var)

    buckets: dict[int, dict[Monomial, Fraction]] = {}
    for mono, c in num.terms.items():
        rest = mono[:vi] + mono[vi + 1 :]
        buckets.setdefault(mono[vi], {})[rest] = c
    den_reduced = MultiPoly.make(
        reduced, {m[:vi] + m[vi + 1 :]: c for m, c in den.terms.items()}
    )

    degree = max(buckets) if buckets else 0
    coeffs = []
    for k in range(degree + 1):
        bucket = buckets.get(k)
        if bucket is None:
            coeffs.append(RATFUNC_ZERO)
        else:
            coeffs.append(make_ratfunc(MultiPoly.make(reduced, bucket), den_reduced))
    return tuple(coeffs)


def coefficient_of(e: Expr, var: str, k: int) -> RatFunc:
    """The RatFunc multiplying var^k in the canonical form of `e`."""
    if k < 0:
        raise ValueError("coefficient index must be nonnegative")
    coeffs = _var_coefficients(_normalized_in_var(e, var), var)
    return coeffs[k] if k < len(coeffs) else RATFUNC_ZERO


@dataclass(frozen=True)
class MainVarPoly:
    """A polynomial in one distinguished variable with RatFunc coefficients.

    `coeffs[i]` multiplies main_var**i; the zero polynomial is degree 0
    with a single zero coefficient, so the length is always degree + 1.
    """

    main_var: str
    coeffs: tuple[RatFunc, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> RatFunc:
        return self.coeffs[-1]


def collect_main_var(e: Expr, var: str) -> MainVarPoly:
    """Collect `e` as a polynomial in `var` with var-free coefficients."""
    return MainVarPoly(var, _var_coefficients(_normalized_in_var(e, var), var))


def simplify(r: RatFunc, level: int) -> RatFunc:
    """Optionally cancel common univariate factors.

    Level 0 returns the input unchanged (canonical form already combines
    like terms). Level 1 additionally divides out the polynomial GCD when
    numerator and denominator are univariate in the same symbol. The
    result is always cross-multiplication-equal to the input.
    """
    if level == 0:
        return r
    if level != 1:
        raise ValueError(f"unknown simplify level {level!r}")
    num_used = r.numerator.used_symbols()
    if len(num_used) != 1 or num_used != r.denominator.used_symbols():
        return r
    (name,) = num_used
    a = _dense_univariate(r.numerator, name)
    b = _dense_univariate(r.denominator, name)
    g = _poly_gcd(a, b)
    if len(g) < 2:
        return r
    symbols = (name,)
    num = MultiPoly.make(
        symbols, {(i,): c for i, c in enumerate(_poly_divexact(a, g))}
    )
    den = MultiPoly.make(
        symbols, {(i,): c for i, c in enumerate(_poly_divexact(b, g))}
    )
    return make_ratfunc(num, den)


def _dense_univariate(p: MultiPoly, name: str) -> list[Fraction]:
    i = p.symbols.index(name)
    out = [Fraction(0)] * (p.degree_in(name) + 1)
    for mono, c in p.terms.items():
        out[mono[i]] = c
    return out


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _poly_trim(a)
        if not a:
            break
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_mod(a, b)
    return [c / a[-1] for c in a] if a else a


def _poly_divexact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _poly_trim(a)
        if not a:
            break
    assert not a, "inexact polynomial division"
    return q


def eval_at(
    value: Union[Expr, RatFunc], assignment: Mapping[str, Fraction | int]
) -> Fraction:
    """Exact evaluation at a rational point (the random-point oracle)."""
    point = {name: Fraction(v) for name, v in assignment.items()}
    if isinstance(value, RatFunc):
        den = value.denominator.eval(point)
        if den == 0:
            raise DivisionByZeroAtPoint("denominator vanishes at the given point")
        return value.numerator.eval(point) / den
    return _eval_expr(value, point)


def _eval_expr(e: Expr, point: Mapping[str, Fraction]) -> Fraction:
    if isinstance(e, IntegerLit):
        return Fraction(e.value)
    if isinstance(e, RationalLit):
        return Fraction(e.numerator, e.denominator)
    if isinstance(e, SymbolRef):
        if e.name not in point:
            raise UnboundSymbol(f"no value assigned to symbol '{e.name}'", e.span)
        return point[e.name]
    if isinstance(e, Sum):
        return sum((_eval_expr(t, point) for t in e.terms), Fraction(0))
    if isinstance(e, Product):
        out = Fraction(1)
        for f in e.factors:
            out *= _eval_expr(f, point)
        return out
    if isinstance(e, Quotient):
        den = _eval_expr(e.denominator, point)
        if den == 0:
            raise DivisionByZeroAtPoint(
                "denominator vanishes at the given point",
                getattr(e.denominator, "span", None) or e.span,
            )
        return _eval_expr(e.numerator, point) / den
    if isinstance(e, Power):
        exponent = _eval_expr(e.exponent, point)
        if exponent.denominator != 1:
            raise SymbolicExponent(
                "exponent does not evaluate to an integer",
                getattr(e.exponent, "span", None) or e.span,
            )
        base = _eval_expr(e.base, point)
        k = int(exponent)
        if k < 0 and base == 0:
            raise DivisionByZeroAtPoint(
                "zero base raised to a negative power",
                getattr(e.base, "span", None) or e.span,
            )
        return base**k
    raise TypeError(f"not an evaluable value: {e!r}")
