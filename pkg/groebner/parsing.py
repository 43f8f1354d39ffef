"""
Text grammar for polynomials.

Terms are joined by ``+``/``-``; a term is ``coeff``, ``coeff*mono`` or
``mono``; a monomial is a ``*``-product of ``x`` / ``x^3`` factors;
coefficients are integers or ``a/b``. Whitespace is insignificant.
Parsing is delegated to sympy, then the expanded expression is read back
term by term into the target ring.
"""
import logging
import re
from fractions import Fraction

from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, \
    standard_transformations

from groebner.consts import POLYNOMIAL_ALPHABET
from groebner.exceptions import FieldError, PolynomialParseError

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)
IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


def parse_polynomial(text, ring):
    """
    Parses ``text`` into a polynomial of ``ring``
    :param text: polynomial in the text grammar
    :param ring: target ``PolynomialRing``; every identifier in ``text`` must
        be one of its variables
    :return: ``Polynomial``
    """
    source = text.strip()
    if not source:
        raise PolynomialParseError(text, 'empty expression')
    bad = set(source) - POLYNOMIAL_ALPHABET
    if bad:
        raise PolynomialParseError(text, f'unexpected characters {sorted(bad)}')
    unknown = [name for name in IDENTIFIER.findall(source)
               if name not in ring.index]
    if unknown:
        raise PolynomialParseError(text, f'unknown variables {unknown}')

    # every identifier is bound explicitly so names such as E, I, S or N are
    # never read as sympy constants
    symbols = [Symbol(name) for name in ring.variables]
    local_dict = dict(zip(ring.variables, symbols))
    try:
        expression = parse_expr(source, local_dict=local_dict,
                                transformations=TRANSFORMATIONS)
        if symbols:
            terms = Poly(expression, *symbols, domain='QQ').terms()
        else:
            value = expression.as_numer_denom()
            if not all(part.is_Integer for part in value):
                raise ValueError('not a rational constant')
            terms = [((), expression)]
    except Exception as cause:
        raise PolynomialParseError(text, str(cause) or type(cause).__name__) \
            from cause

    coefficients = {}
    try:
        for exponents, coeff in terms:
            coefficients[tuple(exponents)] = Fraction(int(coeff.p),
                                                      int(coeff.q))
        return ring.from_dict(coefficients)
    except FieldError as cause:
        raise PolynomialParseError(text, str(cause)) from cause