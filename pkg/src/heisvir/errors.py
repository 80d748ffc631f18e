"""Package-wide exception types."""


class HeisvirError(Exception):
    pass


class MixedModules(HeisvirError):
    """An action was requested on a vector belonging to a different module."""


class NeedNonzeroZ3(HeisvirError):
    """Oscillator-style constructions require the z3 scalar to be nonzero."""


class PreconditionZ3(HeisvirError):
    """The Whittaker-vector search requires the z3 value to be zero."""


class LambdaZero(HeisvirError):
    """The embedding construction requires a nonzero shift parameter."""


class NotNegativePart(HeisvirError):
    """The element is not supported on the strictly negative generators."""


class UnsupportedGenerator(HeisvirError):
    """The generator does not act on this module (e.g. outside the polynomial subalgebra)."""


class UnstableSpan(HeisvirError):
    """A truncated span changed when the buffer grew; raise the buffer."""


class ExprError(HeisvirError):
    """Syntax error in the expression language, with line/column attached."""

    def __init__(self, message, line=1, column=1):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


class IntegerOverflow(ExprError):
    """Integer literal outside the supported index range."""


class ParamError(HeisvirError):
    """Malformed parameter file or inline parameter list."""
