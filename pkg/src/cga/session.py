"""Evaluation sessions: a variable environment over one scalar backend.

The session evaluates parsed statements against the algebra and geometry
layers and renders results deterministically, so running the same script
twice produces byte-identical transcripts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import expr, geometry
from .errors import AlgebraError, EvalError, LexError, ParseError
from .multivector import (
    Multivector,
    canonicalize,
    dual,
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
    to_json_dict,
)
from .scalars import backend_by_name


@dataclass
class Outcome:
    """Result of evaluating one statement."""

    value: object
    text: str
    warnings: list = field(default_factory=list)
    suppressed: bool = False
    bound_name: str = None


class Session:
    """One calculator session: backend, environment, output settings."""

    def __init__(self, backend="symbolic", json_output=False):
        self.backend = backend_by_name(backend) if isinstance(backend, str) else backend
        self.json_output = json_output
        self.env = {}
        self.counter = 0
        self._seed_constants()

    def _seed_constants(self):
        i5, i5i = pseudoscalar_constants(self.backend)
        self.env["I5"] = i5
        self.env["I5i"] = i5i

    def set_backend(self, name: str):
        """Switch backends; clears the environment to avoid mixed coefficients."""
        self.backend = backend_by_name(name)
        self.env = {}
        self._seed_constants()

    def clear(self, name: str):
        if name not in self.env:
            raise EvalError(f"'{name}' is not bound")
        del self.env[name]

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, source: str) -> Outcome:
        node, suppress, warnings = expr.parse_statement(source)
        bound = None
        if isinstance(node, expr.Assign):
            value = self._eval(node.expr)
            self.env[node.name] = self._storable(value)
            bound = node.name
        else:
            value = self._eval(node)
        self.counter += 1
        return Outcome(
            value=value,
            text=self.render(value),
            warnings=warnings,
            suppressed=suppress,
            bound_name=bound,
        )

    def render(self, value) -> str:
        if self.json_output:
            return json.dumps(self._jsonable(value))
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, tuple):
            return "(" + ", ".join(self.backend.render(c) for c in value) + ")"
        return gfactor_render(value)

    def _jsonable(self, value):
        if isinstance(value, bool):
            return value
        if isinstance(value, tuple):
            return [self.backend.render_expr(c) for c in value]
        return to_json_dict(value)

    def _storable(self, value):
        if isinstance(value, bool):
            return Multivector.scalar(self.backend, int(value))
        if isinstance(value, tuple):
            return geometry.euclidean_vector(self.backend, *value)
        return value

    def _eval(self, node):
        bk = self.backend
        if isinstance(node, expr.Number):
            return Multivector.scalar(bk, node.value)
        if isinstance(node, expr.Decimal):
            return Multivector.scalar(bk, bk.from_decimal_literal(node.text))
        if isinstance(node, expr.Basis):
            return canonicalize(bk, node.indices)
        if isinstance(node, expr.Symbol):
            if node.name in self.env:
                return self.env[node.name]
            if bk.supports_symbols:
                return Multivector.scalar(bk, bk.symbol(node.name))
            raise EvalError(
                f"unknown name '{node.name}' (the {bk.name} backend accepts no free symbols)"
            )
        if isinstance(node, expr.Neg):
            return -self._as_mv(self._eval(node.operand), "unary minus")
        if isinstance(node, expr.BinOp):
            left = self._as_mv(self._eval(node.left), f"'{node.op}'")
            right = self._as_mv(self._eval(node.right), f"'{node.op}'")
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            if node.op == "^":
                return left ^ right
            return left | right
        if isinstance(node, expr.Call):
            return self._call(node)
        if isinstance(node, expr.KwArg):
            raise EvalError("named arguments are only allowed in subst(...)")
        raise EvalError(f"cannot evaluate {node!r}")

    def _as_mv(self, value, where) -> Multivector:
        if isinstance(value, Multivector):
            return value
        raise EvalError(f"{where} needs a multivector operand")

    def _scalar_arg(self, value, what):
        value = self._as_mv(value, what)
        if not value.is_scalar():
            raise EvalError(f"{what} must be a scalar")
        return value.scalar_part()

    def _int_arg(self, value, what) -> int:
        scalar = self._scalar_arg(value, what)
        bk = self.backend
        if bk.name == "symbolic":
            if not scalar.is_constant():
                raise EvalError(f"{what} must be an integer")
            scalar = scalar.constant_value()
        if isinstance(scalar, float):
            if scalar != int(scalar):
                raise EvalError(f"{what} must be an integer")
            return int(scalar)
        if isinstance(scalar, Fraction):
            if scalar.denominator != 1:
                raise EvalError(f"{what} must be an integer")
            return int(scalar)
        return int(scalar)

    def _point_arg(self, value, fn) -> Multivector:
        value = self._as_mv(value, f"argument of {fn}")
        if self.backend.is_zero(value.coefficient(0)):
            raise EvalError(f"{fn} expects conformal points (nonzero e[0] part)")
        return value

    def _call(self, node):
        name = node.name
        args = node.args
        if name == "subst":
            return self._subst(args)
        values = []
        for arg in args:
            if isinstance(arg, expr.KwArg):
                raise EvalError("named arguments are only allowed in subst(...)")
            values.append(self._eval(arg))
        handler = _BUILTINS.get(name)
        if handler is None:
            raise EvalError(f"unknown function '{name}'")
        arity, fn = handler
        low, high = arity
        if not (low <= len(values) <= (high if high is not None else len(values))):
            expected = str(low) if low == high else f"{low}..{high if high else 'n'}"
            raise EvalError(f"{name}() takes {expected} arguments, got {len(values)}")
        return fn(self, values)

    def _subst(self, args):
        if not self.backend.supports_symbols:
            raise EvalError("subst(...) requires the symbolic backend")
        if not args or isinstance(args[0], expr.KwArg):
            raise EvalError("subst(A, name=value, ...) needs the target first")
        target = self._as_mv(self._eval(args[0]), "subst target")
        bindings = {}
        for arg in args[1:]:
            if not isinstance(arg, expr.KwArg):
                raise EvalError("subst bindings must look like name=value")
            bindings[arg.name] = self._scalar_arg(self._eval(arg.value), f"value for {arg.name}")
        terms = {m: self.backend.substitute(c, bindings) for m, c in target.terms.items()}
        return Multivector(self.backend, terms)


def _builtin_gp(session, values):
    factors = [session._as_mv(v, "gp") for v in values]
    return geometric_product(*factors)


def _builtin_op(session, values):
    factors = [session._as_mv(v, "op") for v in values]
    return outer_product(*factors)


def _builtin_lc(session, values):
    return left_contraction(session._as_mv(values[0], "lc"), session._as_mv(values[1], "lc"))


def _builtin_grade(session, values):
    return grade(session._as_mv(values[0], "grade"), session._int_arg(values[1], "grade index"))


def _builtin_gradeq(session, values):
    return grade_q(session._as_mv(values[0], "gradeq"), session._int_arg(values[1], "grade index"))


def _builtin_rev(session, values):
    return reversion(session._as_mv(values[0], "rev"))


def _builtin_inv(session, values):
    return multivector_inverse(session._as_mv(values[0], "inv"))


def _builtin_gradeinv(session, values):
    return involution(session._as_mv(values[0], "gradeinv"))


def _builtin_dual(session, values):
    return dual(session._as_mv(values[0], "dual"))


def _builtin_mag2(session, values):
    return Multivector(
        session.backend, {0: magnitude_squared(session._as_mv(values[0], "mag2"))}
    )


def _builtin_mag(session, values):
    if session.backend.exact:
        raise EvalError("mag(...) requires the float backend; use mag2 in exact backends")
    return Multivector(session.backend, {0: magnitude(session._as_mv(values[0], "mag"))})


def _builtin_point(session, values):
    coords = [session._scalar_arg(v, "point coordinate") for v in values]
    return geometry.point(session.backend, *coords)


def _builtin_tovector(session, values):
    return geometry.to_vector(session._as_mv(values[0], "tovector"))


def _builtin_line(session, values):
    return geometry.line_through(
        session._point_arg(values[0], "line"), session._point_arg(values[1], "line")
    )


def _builtin_plane(session, values):
    return geometry.plane_through(*(session._point_arg(v, "plane") for v in values))


def _builtin_sphere(session, values):
    return geometry.sphere_through(*(session._point_arg(v, "sphere") for v in values))


def _builtin_spheredual(session, values):
    center = session._point_arg(values[0], "spheredual")
    return geometry.sphere_dual(center, session._scalar_arg(values[1], "radius"))


def _builtin_planedual(session, values):
    coords = [session._scalar_arg(v, "planedual argument") for v in values]
    normal = geometry.euclidean_vector(session.backend, *coords[:3])
    return geometry.plane_dual(normal, coords[3])


def _builtin_translator(session, values):
    coords = [session._scalar_arg(v, "translator component") for v in values]
    return geometry.translator(geometry.euclidean_vector(session.backend, *coords)).mv


def _builtin_rotor(session, values):
    a = session._as_mv(values[0], "rotor")
    b = session._as_mv(values[1], "rotor")
    return geometry.rotor(a, b).mv


def _builtin_rotate(session, values):
    x = session._as_mv(values[0], "rotate")
    a = session._as_mv(values[1], "rotate")
    b = session._as_mv(values[2], "rotate")
    if len(values) == 3:
        return geometry.rotation(x, a, b)
    if session.backend.exact:
        raise EvalError("raw rotation angles require the float backend")
    angle = session._scalar_arg(values[3], "rotation angle")
    return geometry.rotation(x, a, b, angle)


def _builtin_inversor(session, values):
    x = session._as_mv(values[0], "inversor")
    center = session._point_arg(values[1], "inversor")
    return geometry.inversor(x, center, session._scalar_arg(values[2], "radius"))


_BUILTINS = {
    "gp": ((1, None), _builtin_gp),
    "op": ((1, None), _builtin_op),
    "lc": ((2, 2), _builtin_lc),
    "grade": ((2, 2), _builtin_grade),
    "gradeq": ((2, 2), _builtin_gradeq),
    "rev": ((1, 1), _builtin_rev),
    "inv": ((1, 1), _builtin_inv),
    "gradeinv": ((1, 1), _builtin_gradeinv),
    "dual": ((1, 1), _builtin_dual),
    "mag2": ((1, 1), _builtin_mag2),
    "mag": ((1, 1), _builtin_mag),
    "point": ((3, 3), _builtin_point),
    "tovector": ((1, 1), _builtin_tovector),
    "line": ((2, 2), _builtin_line),
    "plane": ((3, 3), _builtin_plane),
    "sphere": ((4, 4), _builtin_sphere),
    "spheredual": ((2, 2), _builtin_spheredual),
    "planedual": ((4, 4), _builtin_planedual),
    "translator": ((3, 3), _builtin_translator),
    "rotor": ((2, 2), _builtin_rotor),
    "rotate": ((3, 4), _builtin_rotate),
    "inversor": ((3, 3), _builtin_inversor),
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS) + ["subst"])

__all__ = [
    "Session",
    "Outcome",
    "BUILTIN_NAMES",
    "AlgebraError",
    "EvalError",
    "LexError",
    "ParseError",
]
