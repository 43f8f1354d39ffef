"""
Exceptions for theorem checks and the command line
"""


class TheoremError(Exception):
    """
    Base class for errors raised while instantiating or checking a theorem
    """


class CertificateMissing(TheoremError):
    """
    Raised when a setup over a non-field base has no flatness (or
    smoothness) certificate for the factor a theorem needs
    """
    def __init__(self, setup, needed='flatness'):
        self.setup = setup
        self.needed = needed
        msg = f'No {needed} certificate available for {setup}'
        super().__init__(msg)


class DivisibilityViolation(TheoremError):
    """
    Raised when the product of the factor types is not divisible by the
    type of the base
    """
    def __init__(self, setup, numerator, denominator):
        self.setup = setup
        self.numerator = numerator
        self.denominator = denominator
        msg = f'{setup}: type product {numerator} is not divisible by ' + \
              f'base type {denominator}'
        super().__init__(msg)


class UnknownAlgebra(TheoremError):
    """
    Raised when a command names an algebra the input file does not define
    """
    def __init__(self, name, known=()):
        self.name = name
        msg = f'unknown algebra "{name}"'
        if known:
            msg += f'; defined: {", ".join(known)}'
        super().__init__(msg)


class UnknownTheorem(TheoremError):
    """
    Raised for a theorem filter outside the supported list
    """
    def __init__(self, name):
        self.name = name
        msg = f'unknown theorem "{name}"'
        super().__init__(msg)
