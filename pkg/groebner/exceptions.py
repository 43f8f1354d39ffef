"""
Exceptions for the polynomial and Groebner basis engine
"""


class GroebnerError(Exception):
    """
    Base class for every error raised by the ``groebner`` package
    """


class FieldError(GroebnerError):
    """
    Raised when a prime field cannot be built or a scalar cannot be mapped
    into it (for example 1/p over F_p)
    """
    def __init__(self, detail):
        self.detail = detail
        msg = f'Invalid scalar field operation: {detail}'
        super().__init__(msg)


class RingMismatchError(GroebnerError):
    """
    Raised when two operands live in different polynomial rings
    """
    def __init__(self, left, right):
        self.left = left
        self.right = right
        msg = f'Ring mismatch: {left!r} vs {right!r}'
        super().__init__(msg)


class OrderMismatchError(GroebnerError):
    """
    Raised when a polynomial is reduced against a Groebner basis computed for
    another monomial order
    """
    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        msg = f'Monomial order mismatch: basis uses {expected}, got {found}'
        super().__init__(msg)


class ZeroPolynomialError(GroebnerError):
    """
    Raised when the leading term of the zero polynomial is requested
    """
    def __init__(self, operation='leading_term'):
        self.operation = operation
        msg = f'"{operation}" is undefined for the zero polynomial'
        super().__init__(msg)


class NotDivisibleError(GroebnerError):
    """
    Raised by exact division when a term of the dividend is not divisible by
    the divisor term
    """
    def __init__(self, dividend, divisor):
        self.dividend = dividend
        self.divisor = divisor
        msg = f'"{dividend}" is not divisible by "{divisor}"'
        super().__init__(msg)


class NonMonomialIdealError(GroebnerError):
    """
    Raised when a monomial-ideal operation receives a generator with more
    than one term
    """
    def __init__(self, generator):
        self.generator = generator
        msg = f'Expected a monomial generator, got "{generator}"'
        super().__init__(msg)


class PolynomialParseError(GroebnerError):
    """
    Raised when text does not follow the polynomial grammar or mentions a
    variable the ring does not have
    """
    def __init__(self, text, reason):
        self.text = text
        self.reason = reason
        msg = f'Cannot parse polynomial "{text}": {reason}'
        super().__init__(msg)
