"""Exception hierarchy shared by every module of the package."""


class AbelianCodeError(Exception):
    """Base class for all errors raised by abelcodes."""


# field
class NotPrime(AbelianCodeError, ValueError):
    pass


class NonCoprime(AbelianCodeError, ValueError):
    pass


class OrderUnavailable(AbelianCodeError, ValueError):
    pass


class DivisionByZero(AbelianCodeError, ZeroDivisionError):
    pass


class FieldMismatch(AbelianCodeError, TypeError):
    pass


# poly
class PolynomialSyntaxError(AbelianCodeError, ValueError):
    """Malformed polynomial text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class VariableIndexOutOfRange(PolynomialSyntaxError):
    pass


class CoefficientOutOfField(PolynomialSyntaxError):
    pass


class ZeroPolynomial(AbelianCodeError, ValueError):
    pass


class ZeroDivisor(AbelianCodeError, ZeroDivisionError):
    pass


class LengthMismatch(AbelianCodeError, ValueError):
    pass


# algebra / orbits / transform
class NotSemisimple(AbelianCodeError, ValueError):
    pass


class ContextMismatch(AbelianCodeError, ValueError):
    pass


class IndexOutOfRange(AbelianCodeError, IndexError):
    pass


class NotInBaseField(AbelianCodeError, ArithmeticError):
    pass


class SpecError(AbelianCodeError, ValueError):
    """Invalid code specification (document schema or constructor arguments)."""


# oracle
class MatrixTooLarge(AbelianCodeError, ValueError):
    pass
