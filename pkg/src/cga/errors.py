"""Exception types shared across the algebra, geometry and calculator layers."""


class AlgebraError(Exception):
    """Base class for algebra-level failures."""


class BackendMismatchError(AlgebraError):
    """Operands carry coefficients from different scalar backends."""


class NotInvertibleError(AlgebraError):
    """The multivector has no inverse."""


class UnsupportedSymbolicInverseError(NotInvertibleError):
    """Inverse requires a linear solve, which the symbolic backend does not support."""


class InexactDivisionError(AlgebraError):
    """Exact division was requested but the quotient does not exist in the ring."""


class LexError(Exception):
    """Illegal input character or malformed literal, with source position."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class ParseError(Exception):
    """Syntax error, with source position."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} at line {line}, column {column}"
        super().__init__(message)
        self.line = line
        self.column = column


class EvalError(Exception):
    """Evaluation-time failure (unknown name, arity, backend violation, ...)."""
