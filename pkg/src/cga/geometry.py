"""Conformal geometry on top of the G(4,1) kernel.

Points embed as null vectors e0 + x + (x^2/2) einf; lines, planes and
spheres are outer products of points (direct form) or vectors built from
normal/center data (dual form); rigid motions and sphere inversions are
versors applied by sandwich products.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .engine import DIM, E0, E1, E2, E3, EINF, indices_of
from .errors import NotInvertibleError
from .multivector import (
    Multivector,
    geometric_product,
    magnitude_squared,
    multivector_inverse,
    outer_product,
    reversion,
)

_EUCLIDEAN_MASKS = {1 << E1, 1 << E2, 1 << E3}


class DegeneracyWarning(UserWarning):
    """A geometric construction collapsed (coincident, collinear, coplanar inputs)."""


def euclidean_vector(backend, x, y, z) -> Multivector:
    """The pure Euclidean vector x e1 + y e2 + z e3."""
    return Multivector(
        backend,
        {1 << E1: backend.coerce(x), 1 << E2: backend.coerce(y), 1 << E3: backend.coerce(z)},
    )


def _require_euclidean(v: Multivector, what: str) -> Multivector:
    if any(mask not in _EUCLIDEAN_MASKS for mask in v.terms):
        raise ValueError(f"{what} must be a pure Euclidean vector (e1, e2, e3 components only)")
    return v


def embed_point(v: Multivector) -> Multivector:
    """Conformal embedding e0 + v + (v^2/2) einf of a Euclidean vector; null."""
    _require_euclidean(v, "point location")
    bk = v.backend
    half_sq = bk.scale(magnitude_squared(v), Fraction(1, 2))
    terms = dict(v.terms)
    terms[1 << E0] = bk.one()
    terms[1 << EINF] = half_sq
    return Multivector(bk, terms)


def point(backend, x, y, z) -> Multivector:
    """Conformal point from raw coordinates."""
    return embed_point(euclidean_vector(backend, x, y, z))


def to_vector(a: Multivector):
    """The (e1, e2, e3) coefficients of a, as a scalar triple."""
    return (a.coefficient(E1), a.coefficient(E2), a.coefficient(E3))


def normalize_point(p: Multivector) -> Multivector:
    """Divide by the e0 coefficient so the point is in normalized form."""
    e0_coeff = p.coefficient(E0)
    if p.backend.is_zero(e0_coeff):
        raise NotInvertibleError("cannot normalize: e0 coefficient is zero")
    return p / e0_coeff


def _warn_if_degenerate(blade: Multivector, message: str) -> Multivector:
    if blade.is_zero():
        warnings.warn(message, DegeneracyWarning, stacklevel=3)
    return blade


def line_through(p1: Multivector, p2: Multivector) -> Multivector:
    """Direct line p1 ^ p2 ^ einf; points q on it satisfy q ^ L = 0."""
    einf = Multivector.blade(p1.backend, EINF)
    return _warn_if_degenerate(
        outer_product(p1, p2, einf), "coincident points give a degenerate line"
    )


def plane_through(p1: Multivector, p2: Multivector, p3: Multivector) -> Multivector:
    """Direct plane p1 ^ p2 ^ p3 ^ einf; points q on it satisfy q ^ P = 0."""
    einf = Multivector.blade(p1.backend, EINF)
    return _warn_if_degenerate(
        outer_product(p1, p2, p3, einf), "collinear points give a degenerate plane"
    )


def sphere_through(p1, p2, p3, p4) -> Multivector:
    """Direct sphere p1 ^ p2 ^ p3 ^ p4; points q on it satisfy q ^ S = 0.

    Coplanar input points make the quadratic part of the sphere equation
    vanish (the blade loses its einf-free component), which is flagged with
    a DegeneracyWarning rather than an error.
    """
    blade = outer_product(p1, p2, p3, p4)
    einf = Multivector.blade(p1.backend, EINF)
    if blade.is_zero() or (blade ^ einf).is_zero():
        warnings.warn(
            "coplanar points give a degenerate sphere", DegeneracyWarning, stacklevel=2
        )
    return blade


def sphere_dual(center: Multivector, radius) -> Multivector:
    """Dual sphere vector center - (r^2/2) einf; p _| S = (r^2 - |x-c|^2)/2."""
    bk = center.backend
    r = bk.coerce(radius)
    half_r2 = bk.scale(bk.mul(r, r), Fraction(1, 2))
    return center - Multivector(bk, {1 << EINF: half_r2})


def plane_dual(n: Multivector, h) -> Multivector:
    """Dual plane vector n + h einf for the plane {x : n.x = h}.

    With the null pairing e0.einf = -1 this gives p _| P* = n.x - h, which
    matches the dual of the direct three-point plane.
    """
    _require_euclidean(n, "plane normal")
    if n.is_zero():
        raise ValueError("plane normal must be nonzero")
    bk = n.backend
    return n + Multivector(bk, {1 << EINF: bk.coerce(h)})


@dataclass(frozen=True)
class Versor:
    """Invertible multivector applied by sandwich, with the parity sign.

    Even versors (translators, rotors) act as V X V^-1; odd ones (the
    sphere-inversion vector) as -V X V^-1.
    """

    mv: Multivector
    odd: bool = False

    def apply(self, x: Multivector) -> Multivector:
        return sandwich(self, x)

    def inverse(self) -> Multivector:
        return multivector_inverse(self.mv)


def sandwich(versor, x: Multivector) -> Multivector:
    """sigma * V . x . V^-1 with sigma = -1 for odd versors.

    When V * reversion(V) is a nonzero scalar s the quotient is taken after
    the full product, V x rev(V) / s, so symbolic sessions stay polynomial
    whenever the end result is.
    """
    if isinstance(versor, Multivector):
        versor = Versor(versor)
    v = versor.mv
    bk = v.backend
    mirror = v * reversion(v)
    if mirror.is_scalar() and not bk.is_zero(mirror.scalar_part()):
        result = geometric_product(v, x, reversion(v)) / mirror.scalar_part()
    else:
        result = geometric_product(v, x, multivector_inverse(v))
    return -result if versor.odd else result


def translator(t: Multivector) -> Versor:
    """Translation versor 1 - (t einf)/2; its inverse is translator(-t)."""
    _require_euclidean(t, "translation vector")
    bk = t.backend
    einf = Multivector.blade(bk, EINF)
    one = Multivector.scalar(bk, 1)
    return Versor(one - (t * einf) / 2)


def rotor(a: Multivector, b: Multivector) -> Versor:
    """Rotation versor a b (sandwich rotates by twice the angle from a to b)."""
    _require_euclidean(a, "rotor vector")
    _require_euclidean(b, "rotor vector")
    if a.is_zero() or b.is_zero():
        raise ValueError("rotor vectors must be nonzero")
    return Versor(a * b)


def rotation(x: Multivector, a: Multivector, b: Multivector, angle=None) -> Multivector:
    """Rotate x in the plane of a and b.

    Without an angle this is the plain rotor sandwich (a b) x (a b)^-1,
    which rotates by twice the angle between a and b.  With an angle the
    rotor is cos(angle/2) - A sin(angle/2) for the unit plane bivector A;
    raw float angles require the float backend, while exact backends accept
    a precomputed (cos(angle/2), sin(angle/2)) pair.
    """
    if angle is None:
        return sandwich(rotor(a, b), x)
    bk = x.backend
    if isinstance(angle, tuple):
        c, s = (bk.coerce(v) for v in angle)
        if bk.exact:
            unit = bk.add(bk.mul(c, c), bk.mul(s, s))
            if not bk.is_one(unit):
                raise ValueError("(c, s) must satisfy c^2 + s^2 = 1")
    else:
        if bk.exact:
            raise TypeError(
                "raw angles need the float backend; exact backends take a "
                "(cos(angle/2), sin(angle/2)) pair"
            )
        c = bk.coerce(math.cos(angle / 2.0))
        s = bk.coerce(math.sin(angle / 2.0))
    _require_euclidean(a, "rotation plane vector")
    _require_euclidean(b, "rotation plane vector")
    bivector = a ^ b
    norm_sq = magnitude_squared(bivector)
    if bk.is_zero(norm_sq):
        raise ValueError("rotation plane is degenerate (parallel vectors)")
    unit_bivector = bivector / bk.sqrt(norm_sq)
    r = Multivector(bk, {0: c}) - unit_bivector * s
    return sandwich(Versor(r), x)


def inversion(center: Multivector, radius) -> Versor:
    """Odd versor for inversion in the sphere of the given center and radius."""
    return Versor(sphere_dual(center, radius), odd=True)


def inversor(x: Multivector, center: Multivector, radius) -> Multivector:
    """Invert x in the sphere centered at the given point: -S x S^-1."""
    return sandwich(inversion(center, radius), x)


def linear_action(versor) -> "callable":
    """Precompiled sandwich of a fixed versor, as a sparse linear map.

    Sandwiching is linear in the argument, so the action is tabulated once
    on the 32 basis blades; applying it then costs a few multiply-adds per
    stored term, which is what makes bulk float transforms cheap.
    """
    if isinstance(versor, Multivector):
        versor = Versor(versor)
    bk = versor.mv.backend
    columns = []
    for mask in range(DIM):
        image = sandwich(versor, Multivector.blade(bk, *indices_of(mask)))
        columns.append(tuple(image.terms.items()))

    def apply(x: Multivector) -> Multivector:
        out = {}
        for mask, coeff in x.terms.items():
            for rmask, factor in columns[mask]:
                scaled = bk.mul(coeff, factor)
                if rmask in out:
                    out[rmask] = bk.add(out[rmask], scaled)
                else:
                    out[rmask] = scaled
        return Multivector(bk, out)

    return apply
