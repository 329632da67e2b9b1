"""Coefficient arithmetic: exact rationals, multivariate polynomials, floats.

Each backend implements one ring of scalars together with the exact
zero-test, division and text rendering the multivector layer relies on.
Exact backends never round; the float backend treats |v| <= 1e-12 as zero
when multivectors are canonicalized.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import InexactDivisionError

# A monomial is a name-sorted tuple of (symbol, exponent) pairs, exponents > 0.
Monomial = tuple

_EMPTY: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_divides(num: Monomial, den: Monomial):
    """Quotient monomial num/den, or None when not divisible."""
    exps = dict(num)
    for name, e in den:
        have = exps.get(name, 0)
        if have < e:
            return None
        if have == e:
            del exps[name]
        else:
            exps[name] = have - e
    return tuple(sorted(exps.items()))


def _mono_cmp(a: Monomial, b: Monomial) -> int:
    # Graded lexicographic over name-sorted symbols (earliest name dominates).
    # This is a proper monomial order (multiplicative), which exact division
    # by leading terms requires; the registry order is used only for display.
    da, db = _mono_degree(a), _mono_degree(b)
    if da != db:
        return -1 if da < db else 1
    ea, eb = dict(a), dict(b)
    for name in sorted(set(ea) | set(eb)):
        xa, xb = ea.get(name, 0), eb.get(name, 0)
        if xa != xb:
            return 1 if xa > xb else -1
    return 0


_mono_key = functools.cmp_to_key(_mono_cmp)


class Poly:
    """Multivariate polynomial over exact rationals, always expanded.

    Stored as a mapping monomial -> Fraction with no zero coefficients, so
    equality is plain dict equality and independent of any symbol registry.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = clean.get(mono, Fraction(0)) + coeff
                    if not clean[mono]:
                        del clean[mono]
        self.terms = clean

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls({_EMPTY: Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.constant(other).terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = _mono_mul(ma, mb)
                out[mono] = out.get(mono, Fraction(0)) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = Poly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly({m: c / other for m, c in self.terms.items()})
        if isinstance(other, Poly):
            return self.divide_exact(other)
        return NotImplemented

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {_EMPTY}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_EMPTY, Fraction(0))

    def symbols(self):
        names = set()
        for mono in self.terms:
            for name, _ in mono:
                names.add(name)
        return names

    def substitute(self, bindings) -> "Poly":
        """Exact substitution; values may be Fractions or polynomials."""
        out = Poly()
        for mono, coeff in self.terms.items():
            term = Poly.constant(coeff)
            for name, exp in mono:
                if name in bindings:
                    value = _as_poly(bindings[name])
                    term = term * value ** exp
                else:
                    term = term * Poly.variable(name) ** exp
            out = out + term
        return out

    def divide_exact(self, den: "Poly") -> "Poly":
        """Quotient self/den when den divides self exactly, else raise."""
        if not den:
            raise ZeroDivisionError("polynomial division by zero")
        if den.is_constant():
            c = den.constant_value()
            return Poly({m: v / c for m, v in self.terms.items()})
        lead_den = max(den.terms, key=_mono_key)
        quotient = {}
        rem = dict(self.terms)
        while rem:
            lead_rem = max(rem, key=_mono_key)
            mono = _mono_divides(lead_rem, lead_den)
            if mono is None:
                raise InexactDivisionError("polynomial division is not exact")
            coeff = rem[lead_rem] / den.terms[lead_den]
            quotient[mono] = quotient.get(mono, Fraction(0)) + coeff
            for mb, cb in den.terms.items():
                key = _mono_mul(mono, mb)
                val = rem.get(key, Fraction(0)) - coeff * cb
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return Poly(quotient)

    def __repr__(self):
        return f"Poly({self.terms!r})"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


def rational_sqrt(value: Fraction) -> Fraction:
    """Exact square root of a rational, or raise when it is irrational."""
    if value < 0:
        raise InexactDivisionError("square root of a negative rational")
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise InexactDivisionError(f"{value} is not a perfect square")
    return Fraction(rn, rd)


def poly_substitute(p: Poly, bindings):
    """Substitute symbols in p; collapses to a Fraction when fully bound."""
    result = p.substitute(bindings)
    if result.is_constant():
        return result.constant_value()
    return result


class RationalBackend:
    """Exact rational coefficients (arbitrary precision, always reduced)."""

    name = "exact"
    exact = True
    supports_symbols = False

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot use {type(value).__name__} as an exact rational")

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_zero(self, a):
        return not a

    def is_one(self, a):
        return a == 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, a, fr: Fraction):
        return a * fr

    def divide(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def equal(self, a, b):
        return a == b

    def sqrt(self, a):
        return rational_sqrt(a)

    def from_decimal_literal(self, text: str):
        return Fraction(text)

    def from_symbol(self, name: str):
        raise TypeError(f"free symbol '{name}' is not allowed in the exact backend")

    def render(self, a) -> str:
        return str(a)

    def render_expr(self, a) -> str:
        return str(a)

    def sign_split(self, a):
        """(negative, text of |a|) for multivector term joining."""
        return (a < 0, str(-a if a < 0 else a))

    def needs_parens(self, a) -> bool:
        return False


class FloatBackend:
    """IEEE double coefficients; zero-test uses the cleanup threshold."""

    name = "float"
    exact = False
    supports_symbols = False
    eps = 1e-12

    def coerce(self, value):
        if isinstance(value, (int, Fraction)):
            value = float(value)
        if not isinstance(value, float):
            raise TypeError(f"cannot use {type(value).__name__} as a float scalar")
        if math.isnan(value):
            raise ValueError("NaN coefficients are not allowed")
        return value

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def is_zero(self, a):
        return abs(a) <= self.eps

    def is_one(self, a):
        return a == 1.0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, a, fr: Fraction):
        return a * float(fr)

    def divide(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError("division by (near-)zero float")
        return a / b

    def equal(self, a, b):
        return a == b

    def sqrt(self, a):
        return math.sqrt(a)

    def from_decimal_literal(self, text: str):
        return float(text)

    def from_symbol(self, name: str):
        raise TypeError(f"free symbol '{name}' is not allowed in the float backend")

    def render(self, a) -> str:
        return repr(a)

    def render_expr(self, a) -> str:
        text = repr(a)
        if "e" in text and "." not in text.split("e")[0]:
            mantissa, exp = text.split("e")
            text = f"{mantissa}.0e{exp}"
        return text

    def sign_split(self, a):
        neg = math.copysign(1.0, a) < 0
        return (neg, repr(-a if neg else a))

    def needs_parens(self, a) -> bool:
        return False


class PolynomialBackend:
    """Polynomial coefficients over exact rationals, one registry per session.

    Symbols are registered on first use; the registration order (then the
    name) fixes the graded-lexicographic rendering order, so a given input
    script always prints identically.
    """

    name = "symbolic"
    exact = True
    supports_symbols = True

    def __init__(self):
        self._ranks: dict[str, int] = {}

    def symbol(self, name: str) -> Poly:
        if name not in self._ranks:
            self._ranks[name] = len(self._ranks)
        return Poly.variable(name)

    def coerce(self, value):
        if isinstance(value, Poly):
            for name in value.symbols():
                self._ranks.setdefault(name, len(self._ranks))
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.constant(value)
        raise TypeError(f"cannot use {type(value).__name__} as a polynomial scalar")

    def zero(self):
        return Poly()

    def one(self):
        return Poly.constant(1)

    def is_zero(self, a):
        return not a

    def is_one(self, a):
        return a.is_constant() and a.constant_value() == 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, a, fr: Fraction):
        if not fr:
            return Poly()
        return a * Poly.constant(fr)

    def divide(self, a, b):
        return a.divide_exact(b)

    def equal(self, a, b):
        return a == b

    def sqrt(self, a):
        if not a.is_constant():
            raise InexactDivisionError(
                "square roots of non-constant polynomials are not supported"
            )
        return Poly.constant(rational_sqrt(a.constant_value()))

    def from_decimal_literal(self, text: str):
        return Poly.constant(Fraction(text))

    def from_symbol(self, name: str):
        return self.symbol(name)

    def substitute(self, a: Poly, bindings) -> Poly:
        values = {}
        for name, value in bindings.items():
            values[name] = value if isinstance(value, Poly) else Poly.constant(value)
        return a.substitute(values)

    # -- rendering ---------------------------------------------------------

    def _rank(self, name: str):
        r = self._ranks.get(name)
        return (0, r) if r is not None else (1, name)

    def _ordered_monomials(self, p: Poly):
        universe = sorted(p.symbols(), key=self._rank)
        index = {name: i for i, name in enumerate(universe)}

        def key(mono):
            vec = [0] * len(universe)
            for name, e in mono:
                vec[index[name]] = -e
            return (_mono_degree(mono), tuple(vec))

        return sorted(p.terms, key=key), universe

    def _monomial_text(self, mono, coeff: Fraction, display: bool) -> str:
        if display:
            factors = []
            for name, e in sorted(mono, key=lambda it: self._rank(it[0])):
                factors.append(name if e == 1 else f"{name}^{e}")
            body = " ".join(factors)
            if not body:
                return str(coeff)
            if coeff == 1:
                return body
            if coeff == -1:
                return f"-{body}"
            sep = "" if coeff.denominator == 1 else " "
            return f"{coeff}{sep}{body}"
        factors = []
        for name, e in sorted(mono, key=lambda it: self._rank(it[0])):
            factors.extend([name] * e)
        if not factors:
            return str(coeff)
        if coeff == 1:
            return "*".join(factors)
        if coeff == -1:
            return "-" + "*".join(factors)
        return str(coeff) + "*" + "*".join(factors)

    def _render(self, p: Poly, display: bool) -> str:
        if not p:
            return "0"
        ordered, _ = self._ordered_monomials(p)
        parts = []
        for mono in ordered:
            text = self._monomial_text(mono, p.terms[mono], display)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append("-" + text[1:])
            else:
                parts.append("+" + text)
        return "".join(parts)

    def render(self, a) -> str:
        return self._render(a, display=True)

    def render_expr(self, a) -> str:
        return self._render(a, display=False)

    def sign_split(self, a):
        if len(a.terms) != 1:
            return (False, f"({self.render(a)})")
        text = self.render(a)
        if text.startswith("-"):
            return (True, text[1:])
        return (False, text)

    def needs_parens(self, a) -> bool:
        return len(a.terms) > 1


RATIONAL = RationalBackend()
FLOAT = FloatBackend()


def symbolic_backend() -> PolynomialBackend:
    """A fresh polynomial backend with an empty symbol registry."""
    return PolynomialBackend()


BACKEND_NAMES = ("exact", "symbolic", "float")


def backend_by_name(name: str):
    if name == "exact":
        return RATIONAL
    if name == "float":
        return FLOAT
    if name == "symbolic":
        return symbolic_backend()
    raise ValueError(f"unknown backend '{name}' (choose from {', '.join(BACKEND_NAMES)})")
