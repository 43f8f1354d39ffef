"""
Exact scalar arithmetic over the prime fields: the rationals and F_p.

Scalars are plain Python values: ``fractions.Fraction`` over the rationals
(always fully reduced, positive denominator) and ``int`` residues in
``[0, p)`` over F_p. The field object owns the arithmetic, so polynomials
never need to know which field they live over.
"""
from fractions import Fraction

from sympy import isprime
from sympy.polys.domains import GF, QQ

from groebner.consts import DEFAULT_PRIME
from groebner.exceptions import FieldError


class PrimeField:
    """
    Base class of the two prime fields. Subclasses implement the arithmetic
    and the conversion to and from sympy domains (used for dense linear
    algebra)
    """
    characteristic = None

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        raise NotImplementedError

    def is_zero(self, a):
        return not a

    def neg(self, a):
        return self.sub(self.zero, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and \
            self.characteristic == other.characteristic

    def __hash__(self):
        return hash(('PrimeField', self.characteristic))


class RationalField(PrimeField):
    """
    The field of rational numbers with ``Fraction`` scalars
    """
    characteristic = 0
    name = 'Q'

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise FieldError(f'cannot interpret {value!r} as a rational number')

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise FieldError('division by zero')
        return 1 / a

    def div(self, a, b):
        if not b:
            raise FieldError('division by zero')
        return a / b

    def random_element(self, rng, bound):
        return Fraction(rng.randint(-bound, bound))

    def to_text(self, a):
        return str(a)

    @property
    def domain(self):
        return QQ

    def to_domain(self, a):
        return QQ(a.numerator, a.denominator)

    def from_domain(self, a):
        return Fraction(int(a.numerator), int(a.denominator))

    def __repr__(self):
        return 'Q'


class ModularField(PrimeField):
    """
    The prime field F_p with residues stored in [0, p)
    """
    name = 'Fp'

    def __init__(self, characteristic=DEFAULT_PRIME):
        if not isinstance(characteristic, int) or \
                not isprime(characteristic) or characteristic >= 2 ** 31:
            raise FieldError(f'{characteristic!r} is not a prime below 2^31')
        self.characteristic = characteristic

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldError(f'{value} has no image in F_{p}')
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, int):
            return value % p
        if isinstance(value, str):
            return self(Fraction(value))
        raise FieldError(f'cannot interpret {value!r} in F_{p}')

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def mul(self, a, b):
        return a * b % self.characteristic

    def inv(self, a):
        if not a:
            raise FieldError('division by zero')
        return pow(a, -1, self.characteristic)

    def random_element(self, rng, bound=None):
        return rng.randrange(self.characteristic)

    def to_text(self, a):
        return str(a)

    @property
    def domain(self):
        return GF(self.characteristic)

    def to_domain(self, a):
        return self.domain(a)

    def from_domain(self, a):
        return int(a) % self.characteristic

    def __repr__(self):
        return f'Fp({self.characteristic})'


QQ_FIELD = RationalField()


def prime_field(spec=None):
    """
    Builds a field from its textual description: ``Q``, ``Fp:p``, ``Fp p`` or
    an integer characteristic (0 meaning the rationals)
    :param spec: field description
    :return: a ``PrimeField``
    """
    if spec is None or spec == 0 or isinstance(spec, RationalField):
        return QQ_FIELD
    if isinstance(spec, PrimeField):
        return spec
    if isinstance(spec, int):
        return ModularField(spec)
    text = str(spec).strip()
    if text in ('Q', 'QQ'):
        return QQ_FIELD
    for prefix in ('Fp:', 'Fp ', 'GF:', 'GF '):
        if text.startswith(prefix):
            try:
                return ModularField(int(text[len(prefix):].strip()))
            except ValueError:
                break
    if text == 'Fp':
        return ModularField(DEFAULT_PRIME)
    raise FieldError(f'unknown field "{spec}"')
