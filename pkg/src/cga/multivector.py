"""Multivectors of G(4,1): products, grading, involutions, duals, inverses.

A multivector is an immutable mapping from canonical null-basis blades to
backend scalars.  All operations are pure; the heavy lifting (signs, grade
mixing of blades containing both e0 and einf) is pre-tabulated in
:mod:`cga.engine`.
"""

from __future__ import annotations

from fractions import Fraction

from . import engine
from .engine import DIM, EINF, GENERATORS, INDEX_NAMES, indices_of, mask_of
from .errors import (
    BackendMismatchError,
    NotInvertibleError,
    UnsupportedSymbolicInverseError,
)
from .scalars import Poly

_INF_SPELLINGS = {"inf", "∞"}


def _blade_display(mask: int) -> str:
    if mask == 0:
        return ""
    return "e[" + ",".join(INDEX_NAMES[i] for i in indices_of(mask)) + "]"


def _blade_expr(mask: int) -> str:
    names = ["inf" if i == EINF else str(i) for i in indices_of(mask)]
    return "e[" + ",".join(names) + "]"


def _blade_json_key(mask: int) -> str:
    if mask == 0:
        return "s"
    return ".".join("einf" if i == EINF else f"e{i}" for i in indices_of(mask))


def _json_key_mask(key: str) -> int:
    if key == "s":
        return 0
    indices = []
    for part in key.split("."):
        if part == "einf":
            indices.append(EINF)
        elif part in ("e0", "e1", "e2", "e3"):
            indices.append(int(part[1]))
        else:
            raise ValueError(f"unknown blade key '{key}'")
    return mask_of(indices)


class Multivector:
    """Immutable element of G(4,1) over one scalar backend."""

    __slots__ = ("backend", "terms")

    def __init__(self, backend, terms=None):
        clean = {}
        if terms:
            for mask, coeff in terms.items():
                if not backend.is_zero(coeff):
                    clean[mask] = coeff
        object.__setattr__(self, "backend", backend)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def scalar(cls, backend, value) -> "Multivector":
        return cls(backend, {0: backend.coerce(value)})

    @classmethod
    def blade(cls, backend, *generator_indices) -> "Multivector":
        """Canonical blade for a set of distinct ascending generator indices."""
        return cls(backend, {mask_of(generator_indices): backend.one()})

    def coefficient(self, *generator_indices):
        """Coefficient of one canonical blade (zero when absent)."""
        return self.terms.get(mask_of(generator_indices), self.backend.zero())

    # -- helpers -----------------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Multivector):
            if other.backend is not self.backend:
                raise BackendMismatchError(
                    f"operands use different scalar backends "
                    f"({self.backend.name} vs {other.backend.name})"
                )
            return other
        try:
            return Multivector.scalar(self.backend, other)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self):
        return self.terms.get(0, self.backend.zero())

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        bk = self.backend
        out = dict(self.terms)
        for mask, coeff in other.terms.items():
            out[mask] = bk.add(out.get(mask, bk.zero()), coeff)
        return Multivector(bk, out)

    __radd__ = __add__

    def __neg__(self):
        bk = self.backend
        return Multivector(bk, {m: bk.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return _bilinear(self, other, engine.GP_TABLE)

    def __rmul__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return _bilinear(other, self, engine.GP_TABLE)

    def __xor__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return _bilinear(self, other, engine.OUTER_TABLE)

    def __rxor__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return _bilinear(other, self, engine.OUTER_TABLE)

    def __or__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return _bilinear(self, other, engine.LCONT_TABLE)

    def __ror__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return _bilinear(other, self, engine.LCONT_TABLE)

    def __invert__(self):
        return reversion(self)

    def __truediv__(self, scalar):
        bk = self.backend
        if isinstance(scalar, Multivector):
            if not scalar.is_scalar():
                raise TypeError("division is only defined by scalars")
            scalar = scalar.scalar_part()
        else:
            scalar = bk.coerce(scalar)
        return Multivector(bk, {m: bk.divide(c, scalar) for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            coerced = self._coerce_operand(other)
            if coerced is None:
                return NotImplemented
            other = coerced
        elif other.backend.name != self.backend.name:
            # Scalar kinds differ; values are not comparable.
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        bk = self.backend
        return all(bk.equal(c, other.terms[m]) for m, c in self.terms.items())

    __hash__ = None

    def __repr__(self):
        return f"<{gfactor_render(self)}>"

    # -- method spellings of the module operations --------------------------

    def grade(self, k: int) -> "Multivector":
        return grade(self, k)

    def grades(self) -> tuple:
        present = set()
        for mask in self.terms:
            present.update(engine.BLADE_GRADES[mask])
        return tuple(sorted(k for k in present if not grade(self, k).is_zero()))

    def reversion(self) -> "Multivector":
        return reversion(self)

    def involution(self) -> "Multivector":
        return involution(self)

    def dual(self) -> "Multivector":
        return dual(self)

    def inverse(self) -> "Multivector":
        return multivector_inverse(self)


def _bilinear(a: Multivector, b: Multivector, table) -> Multivector:
    bk = a.backend
    out: dict = {}
    for ma, ca in a.terms.items():
        row = table[ma]
        for mb, cb in b.terms.items():
            product = bk.mul(ca, cb)
            for mask, factor in row[mb]:
                scaled = bk.scale(product, factor)
                if mask in out:
                    out[mask] = bk.add(out[mask], scaled)
                else:
                    out[mask] = scaled
    return Multivector(bk, out)


def _linear(a: Multivector, table) -> Multivector:
    bk = a.backend
    out: dict = {}
    for mask, coeff in a.terms.items():
        for rmask, factor in table[mask]:
            scaled = bk.scale(coeff, factor)
            if rmask in out:
                out[rmask] = bk.add(out[rmask], scaled)
            else:
                out[rmask] = scaled
    return Multivector(bk, out)


def _coerced_head(factors):
    if not factors:
        raise TypeError("at least one factor is required")
    head = factors[0]
    if not isinstance(head, Multivector):
        for f in factors[1:]:
            if isinstance(f, Multivector):
                head = Multivector.scalar(f.backend, head)
                break
        else:
            raise TypeError("at least one factor must be a Multivector")
    return head


def canonicalize(backend, generator_indices) -> Multivector:
    """Geometric product of the listed generators in the given order.

    The indices may repeat and appear in any order; the result is the
    canonical-form multivector, e.g. [2, 1] gives -e[1,2] and [inf, 0]
    gives -2 - e[0,inf].  The empty sequence gives the scalar 1.
    """
    result = Multivector.scalar(backend, 1)
    for index in generator_indices:
        if index in _INF_SPELLINGS:
            index = EINF
        if index not in GENERATORS:
            raise ValueError(f"unknown generator index {index!r}")
        result = result * Multivector.blade(backend, index)
    return result


def geometric_product(*factors) -> Multivector:
    """Left-to-right geometric product of one or more multivectors."""
    result = _coerced_head(factors)
    for f in factors[1:]:
        result = result * f
    return result


def outer_product(*factors) -> Multivector:
    """Left-to-right outer (Grassmann) product of one or more multivectors."""
    result = _coerced_head(factors)
    for f in factors[1:]:
        result = result ^ f
    return result


def left_contraction(a: Multivector, b) -> Multivector:
    """Grade-lowering inner product a _| b."""
    return a | b


def grade(a: Multivector, k: int) -> Multivector:
    """True grade-k part of a under the Clifford grading.

    Blades containing both e0 and einf mix two grades, so this is not a
    popcount filter; the split is exact and sums back to a over k = 0..5.
    """
    if not 0 <= k <= 5:
        raise ValueError(f"grade {k} is out of range 0..5")
    bk = a.backend
    out: dict = {}
    for mask, coeff in a.terms.items():
        part = engine.GRADE_SPLIT[mask].get(k)
        if not part:
            continue
        for rmask, factor in part:
            scaled = bk.scale(coeff, factor)
            if rmask in out:
                out[rmask] = bk.add(out[rmask], scaled)
            else:
                out[rmask] = scaled
    return Multivector(bk, out)


def grade_q(a: Multivector, k: int) -> bool:
    """True when a is homogeneous of grade k (zero is every grade)."""
    if not 0 <= k <= 5:
        raise ValueError(f"grade {k} is out of range 0..5")
    return grade(a, k) == a


def reversion(a: Multivector) -> Multivector:
    """Reverse the order of vector factors: sign (-1)^(k(k-1)/2) per grade."""
    return _linear(a, engine.REVERSION_TABLE)


def involution(a: Multivector) -> Multivector:
    """Grade involution: sign (-1)^k per grade."""
    return _linear(a, engine.INVOLUTION_TABLE)


def magnitude_squared(a: Multivector):
    """Scalar part of a * reversion(a), as a backend scalar."""
    return (a * reversion(a)).scalar_part()


def magnitude(a: Multivector):
    """sqrt of magnitude_squared; float backend only."""
    if a.backend.exact:
        raise TypeError(
            "magnitude requires the float backend; use magnitude_squared in exact backends"
        )
    return a.backend.sqrt(magnitude_squared(a))


def pseudoscalar_constants(backend):
    """(I5, I5 inverse) where I5 = e0 ^ e1 ^ e2 ^ e3 ^ einf."""
    i5 = Multivector(
        backend,
        {0b11111: backend.one(), 0b01110: backend.neg(backend.one())},
    )
    return i5, -i5


def dual(a: Multivector) -> Multivector:
    """Dual via contraction with the inverse pseudoscalar: a _| I5^-1."""
    _, i5_inverse = pseudoscalar_constants(a.backend)
    return a | i5_inverse


def multivector_inverse(a: Multivector) -> Multivector:
    """Two-sided inverse of a, when it exists.

    Fast path: when a * reversion(a) is a nonzero scalar s the inverse is
    reversion(a)/s (exact division; in the symbolic backend this raises when
    a coefficient is not divisible by s).  Otherwise the 32x32 left-regular
    linear system is solved, which the symbolic backend does not support.
    """
    if a.is_zero():
        raise NotInvertibleError("zero has no inverse")
    bk = a.backend
    mirror = a * reversion(a)
    if mirror.is_scalar():
        s = mirror.scalar_part()
        if not bk.is_zero(s):
            return reversion(a) / s
    if bk.supports_symbols:
        raise UnsupportedSymbolicInverseError(
            "inverse needs a linear solve, unsupported for symbolic coefficients"
        )
    inverse = _solve_inverse(a)
    if bk.exact and a * inverse != Multivector.scalar(bk, 1):
        raise NotInvertibleError("inverse verification failed")
    return inverse


def _solve_inverse(a: Multivector) -> Multivector:
    bk = a.backend
    # Columns of the left-regular representation: coordinates of a * blade_j.
    columns = []
    for j in range(DIM):
        col = a * Multivector.blade(bk, *indices_of(j))
        columns.append([col.terms.get(i, bk.zero()) for i in range(DIM)])
    matrix = [[columns[j][i] for j in range(DIM)] for i in range(DIM)]
    rhs = [bk.one() if i == 0 else bk.zero() for i in range(DIM)]

    for col in range(DIM):
        if bk.exact:
            pivot = next((r for r in range(col, DIM) if not bk.is_zero(matrix[r][col])), None)
        else:
            pivot = max(range(col, DIM), key=lambda r: abs(matrix[r][col]))
            if bk.is_zero(matrix[pivot][col]):
                pivot = None
        if pivot is None:
            raise NotInvertibleError("left-regular system is singular")
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        diag = matrix[col][col]
        matrix[col] = [bk.divide(v, diag) for v in matrix[col]]
        rhs[col] = bk.divide(rhs[col], diag)
        for r in range(DIM):
            if r != col and not bk.is_zero(matrix[r][col]):
                factor = matrix[r][col]
                matrix[r] = [bk.sub(v, bk.mul(factor, p)) for v, p in zip(matrix[r], matrix[col])]
                rhs[r] = bk.sub(rhs[r], bk.mul(factor, rhs[col]))

    candidate = Multivector(bk, {i: rhs[i] for i in range(DIM)})
    if not bk.exact:
        check = a * candidate - Multivector.scalar(bk, 1)
        if any(abs(c) > 1e-10 for c in check.terms.values()):
            raise NotInvertibleError("float inverse verification failed")
    return candidate


# -- rendering and serialization --------------------------------------------


def _term_order(terms):
    return sorted(terms, key=lambda mask: (mask.bit_count(), mask))


def gfactor_render(a: Multivector) -> str:
    """Deterministic display form, scalar term first then grade-major blades.

    Coefficients equal to one are suppressed and polynomial coefficients
    with several terms are parenthesized, e.g. "(a+b) e[1]".
    """
    if a.is_zero():
        return "0"
    bk = a.backend
    parts = []
    for mask in _term_order(a.terms):
        coeff = a.terms[mask]
        blade = _blade_display(mask)
        if not blade:
            negative, body = bk.sign_split(coeff)
        elif bk.is_one(coeff):
            negative, body = False, blade
        elif bk.is_one(bk.neg(coeff)):
            negative, body = True, blade
        else:
            negative, body = bk.sign_split(coeff)
            body = f"{body} {blade}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def to_expression(a: Multivector) -> str:
    """Calculator-grammar text that parses and evaluates back to a."""
    if a.is_zero():
        return "0"
    bk = a.backend
    parts = []
    for mask in _term_order(a.terms):
        coeff = a.terms[mask]
        blade = _blade_expr(mask)
        if mask == 0:
            text = bk.render_expr(coeff)
            negative = text.startswith("-")
            body = text[1:] if negative else text
        elif bk.is_one(coeff):
            negative, body = False, blade
        elif bk.is_one(bk.neg(coeff)):
            negative, body = True, blade
        else:
            text = bk.render_expr(coeff)
            if bk.needs_parens(coeff):
                negative, body = False, f"({text})*{blade}"
            else:
                negative = text.startswith("-")
                body = f"{text[1:] if negative else text}*{blade}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def to_json_dict(a: Multivector) -> dict:
    """Blade-keyed mapping with coefficients rendered as text."""
    return {
        _blade_json_key(mask): a.backend.render_expr(a.terms[mask])
        for mask in _term_order(a.terms)
    }


def from_json_dict(backend, data: dict) -> Multivector:
    """Rebuild a multivector from :func:`to_json_dict` output."""
    terms = {}
    for key, text in data.items():
        mask = _json_key_mask(key)
        terms[mask] = _scalar_from_text(backend, text)
    return Multivector(backend, terms)


def _scalar_from_text(backend, text: str):
    if backend.name == "float":
        return float(text)
    if backend.name == "exact":
        return Fraction(text)
    return _poly_from_text(backend, text)


def _poly_from_text(backend, text: str):
    # Inverse of PolynomialBackend.render_expr: star-joined factors, compact
    # +/- joins, no exponent notation.
    total = Poly()
    chunks = []
    token = ""
    for ch in text:
        if ch in "+-" and token and token[-1] not in "+-*/":
            chunks.append(token)
            token = ch
        else:
            token += ch
    chunks.append(token)
    for chunk in chunks:
        if not chunk:
            continue
        sign = Fraction(1)
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        term = Poly.constant(sign)
        for factor in chunk.split("*"):
            if not factor:
                continue
            if factor[0].isdigit():
                term = term * Poly.constant(Fraction(factor))
            else:
                term = term * backend.symbol(factor)
        total = total + term
    return total
