"""Conformal geometric algebra engine for G(4,1) over the null basis.

The algebra is generated by {e0, e1, e2, e3, einf} with e0^2 = einf^2 = 0,
ei^2 = 1 and e0 einf + einf e0 = -2.  Coefficients come from one of three
interchangeable backends: exact rationals, multivariate polynomials over
rationals, or IEEE doubles.  A calculator CLI/REPL exposes the whole surface
(see ``cga --help``).
"""

from .engine import E0, E1, E2, E3, EINF
from .errors import (
    AlgebraError,
    BackendMismatchError,
    EvalError,
    InexactDivisionError,
    LexError,
    NotInvertibleError,
    ParseError,
    UnsupportedSymbolicInverseError,
)
from .geometry import (
    DegeneracyWarning,
    Versor,
    embed_point,
    euclidean_vector,
    inversion,
    inversor,
    line_through,
    linear_action,
    normalize_point,
    plane_dual,
    plane_through,
    point,
    rotation,
    rotor,
    sandwich,
    sphere_dual,
    sphere_through,
    to_vector,
    translator,
)
from .multivector import (
    Multivector,
    canonicalize,
    dual,
    from_json_dict,
    geometric_product,
    gfactor_render,
    grade,
    grade_q,
    involution,
    left_contraction,
    magnitude,
    magnitude_squared,
    multivector_inverse,
    outer_product,
    pseudoscalar_constants,
    reversion,
    to_expression,
    to_json_dict,
)
from .scalars import (
    FLOAT,
    RATIONAL,
    FloatBackend,
    Poly,
    PolynomialBackend,
    RationalBackend,
    backend_by_name,
    poly_substitute,
    symbolic_backend,
)
from .session import Session

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BackendMismatchError",
    "DegeneracyWarning",
    "E0",
    "E1",
    "E2",
    "E3",
    "EINF",
    "EvalError",
    "FLOAT",
    "FloatBackend",
    "InexactDivisionError",
    "LexError",
    "Multivector",
    "NotInvertibleError",
    "ParseError",
    "Poly",
    "PolynomialBackend",
    "RATIONAL",
    "RationalBackend",
    "Session",
    "UnsupportedSymbolicInverseError",
    "Versor",
    "backend_by_name",
    "canonicalize",
    "dual",
    "embed_point",
    "euclidean_vector",
    "from_json_dict",
    "geometric_product",
    "gfactor_render",
    "grade",
    "grade_q",
    "inversion",
    "inversor",
    "involution",
    "left_contraction",
    "line_through",
    "linear_action",
    "magnitude",
    "magnitude_squared",
    "multivector_inverse",
    "normalize_point",
    "outer_product",
    "plane_dual",
    "plane_through",
    "point",
    "poly_substitute",
    "pseudoscalar_constants",
    "reversion",
    "rotation",
    "rotor",
    "sandwich",
    "sphere_dual",
    "sphere_through",
    "symbolic_backend",
    "to_expression",
    "to_json_dict",
    "to_vector",
    "translator",
]
