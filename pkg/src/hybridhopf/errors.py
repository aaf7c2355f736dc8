"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    """Inversion or division by the zero scalar."""


class EvalPole(ArithmeticError):
    """Substituting a value for b made a denominator vanish."""


class ZeroParameter(ValueError):
    """The parameter b must be a nonzero Gaussian rational."""


class DimensionMismatch(ValueError):
    """Vectors or matrices of incompatible sizes."""


class UnsupportedVariant(ValueError):
    """The requested data exists only for the other structure variant."""


class ParseError(ValueError):
    """Syntax error in an element or scalar expression.

    Carries the character offset of the offending token and the set of
    token kinds that would have been accepted there.
    """

    def __init__(self, message: str, position: int, expected: tuple = ()):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = tuple(expected)
