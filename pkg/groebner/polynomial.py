"""
Multivariate polynomial rings over a prime field and their elements.

Polynomials are immutable sparse vectors: a tuple of ``(exponents, coeff)``
pairs with non-zero coefficients, strictly descending in the ring's monomial
order. Two rings are the same ring when field, variable names and order agree.
"""
import logging
from operator import add

from frozendict import frozendict

from groebner.exceptions import NotDivisibleError, RingMismatchError, \
    ZeroPolynomialError
from groebner.orders import MonomialOrder, degree, monomial_divides, \
    monomial_quotient
from groebner.scalars import prime_field

logger = logging.getLogger(__name__)


class PolynomialRing:
    """
    The polynomial ring ``field[variables]`` equipped with a monomial order.
    Variable names are ASCII identifiers; their position defines the exponent
    layout and the variable order (first variable largest)
    """

    def __init__(self, field=None, variables=(), order=None):
        self.field = prime_field(field)
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f'Duplicate variable names in {self.variables}')
        self.order = order if order is not None else MonomialOrder.grevlex()
        self.index = frozendict({v: i for i, v in enumerate(self.variables)})

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def zero(self):
        return Polynomial(self, ())

    @property
    def one(self):
        return self.constant(1)

    def constant(self, value):
        c = self.field(value)
        if not c:
            return self.zero
        return Polynomial(self, ((self.unit_exponents(), c),))

    def unit_exponents(self):
        return (0,) * self.nvars

    def gen(self, name):
        """The variable called ``name`` as a polynomial"""
        exponents = [0] * self.nvars
        exponents[self.index[name]] = 1
        return Polynomial(self, ((tuple(exponents), self.field.one),))

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exponents, coeff=1):
        c = self.field(coeff)
        if not c:
            return self.zero
        return Polynomial(self, ((tuple(exponents), c),))

    def from_dict(self, terms):
        """
        Builds a polynomial from a mapping ``exponents -> coefficient``;
        coefficients are coerced into the field and zeros are dropped
        """
        field = self.field
        cleaned = {}
        for exponents, coeff in terms.items():
            c = field(coeff)
            if c:
                cleaned[tuple(exponents)] = c
        return self._from_clean(cleaned)

    def _from_clean(self, cleaned):
        key = self.order.key
        ordered = sorted(cleaned.items(), key=lambda t: key(t[0]),
                         reverse=True)
        return Polynomial(self, tuple(ordered))

    def parse(self, text):
        from groebner.parsing import parse_polynomial
        return parse_polynomial(text, self)

    def with_order(self, order):
        return PolynomialRing(self.field, self.variables, order)

    def with_variables(self, variables, order=None):
        return PolynomialRing(self.field, variables,
                              order if order is not None else self.order)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and \
            self.field == other.field and \
            self.variables == other.variables and self.order == other.order

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f'{self.field!r}[{", ".join(self.variables)}]<{self.order!r}>'


class Polynomial:
    """
    An element of a ``PolynomialRing``. All arithmetic returns new objects
    """
    __slots__ = ('ring', 'terms', '_hash')

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def leading_term(self):
        """Returns ``(coefficient, exponents)`` of the maximal term"""
        if not self.terms:
            raise ZeroPolynomialError()
        exponents, coeff = self.terms[0]
        return coeff, exponents

    def leading_monomial(self):
        return self.leading_term()[1]

    def leading_coefficient(self):
        return self.leading_term()[0]

    def monomials(self):
        return tuple(exponents for exponents, _ in self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial"""
        return max((degree(e) for e, _ in self.terms), default=-1)

    def is_homogeneous(self):
        return len({degree(e) for e, _ in self.terms}) <= 1

    def is_constant(self):
        return all(not any(e) for e, _ in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_term(self):
        unit = self.ring.unit_exponents()
        for exponents, coeff in self.terms:
            if exponents == unit:
                return coeff
        return self.ring.field.zero

    def linear_part(self):
        """Mapping ``variable index -> coefficient`` of the degree-one terms"""
        return frozendict({exponents.index(1): coeff
                           for exponents, coeff in self.terms
                           if degree(exponents) == 1})

    def homogeneous_component(self, d):
        return Polynomial(self.ring, tuple(t for t in self.terms
                                           if degree(t[0]) == d))

    def support(self):
        """Indices of the variables that occur in some term"""
        return frozenset(i for exponents, _ in self.terms
                         for i, e in enumerate(exponents) if e)

    def variables(self):
        return tuple(self.ring.variables[i] for i in sorted(self.support()))

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _merge(self.terms, other.terms,
                                            self.ring.order.key,
                                            self.ring.field.add))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, scalar):
        field = self.ring.field
        c = field(scalar)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, tuple((e, field.mul(c, a))
                                           for e, a in self.terms))

    def mul_term(self, coeff, exponents):
        """Multiplies by the single term ``coeff * x^exponents``"""
        field = self.ring.field
        if not coeff:
            return self.ring.zero
        return Polynomial(self.ring, tuple(
            (tuple(map(add, e, exponents)), field.mul(coeff, a))
            for e, a in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if len(other.terms) == 1:
            exponents, coeff = other.terms[0]
            return self.mul_term(coeff, exponents)
        field = self.ring.field
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(map(add, e1, e2))
                acc[e] = field.add(acc.get(e, field.zero), field.mul(c1, c2))
        return self.ring._from_clean({e: c for e, c in acc.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError('Only non-negative integer powers are supported')
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_by_term(self, coeff, exponents):
        """
        Exact division by the term ``coeff * x^exponents``; raises
        ``NotDivisibleError`` if a term is not divisible
        """
        field = self.ring.field
        inv = field.inv(coeff)
        terms = []
        for e, c in self.terms:
            if not monomial_divides(exponents, e):
                divisor = self.ring.monomial(exponents, coeff)
                raise NotDivisibleError(self, divisor)
            terms.append((monomial_quotient(e, exponents), field.mul(c, inv)))
        return Polynomial(self.ring, tuple(terms))

    def exact_divide(self, term):
        if not isinstance(term, Polynomial) or not term.is_monomial():
            raise NotDivisibleError(self, term)
        self._check(term)
        coeff, exponents = term.leading_term()
        return self.divide_by_term(coeff, exponents)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    # -- change of ring ------------------------------------------------------

    def to_ring(self, ring):
        """
        Re-expresses the polynomial in ``ring``, whose variables must include
        every variable that occurs here
        """
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingMismatchError(self.ring, ring)
        positions = []
        for i in sorted(self.support()):
            name = self.ring.variables[i]
            if name not in ring.index:
                raise RingMismatchError(self.ring, ring)
            positions.append((i, ring.index[name]))
        cleaned = {}
        for exponents, coeff in self.terms:
            target = [0] * ring.nvars
            for i, j in positions:
                target[j] = exponents[i]
            cleaned[tuple(target)] = coeff
        return ring._from_clean(cleaned)

    def rename(self, mapping, ring):
        """
        Renames variables through ``mapping`` (old name -> new name) and
        lands in ``ring``
        """
        renamed = self.ring.with_variables(
            tuple(mapping.get(v, v) for v in self.ring.variables))
        return Polynomial(renamed, self.terms).to_ring(ring)

    def substitute(self, values):
        """
        Substitutes polynomials (or scalars) for variables. ``values`` maps
        variable names to elements of this polynomial's ring
        """
        ring = self.ring
        images = {ring.index[name]: (value if isinstance(value, Polynomial)
                                     else ring.constant(value))
                  for name, value in values.items()}
        result = ring.zero
        for exponents, coeff in self.terms:
            kept = list(exponents)
            term = ring.one
            for i, image in images.items():
                if exponents[i]:
                    term = term * image ** exponents[i]
                    kept[i] = 0
            result = result + term.mul_term(coeff, tuple(kept))
        return result

    # -- comparison and display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self):
        return format_terms(self.terms, self.ring.variables, self.ring.field)

    def __repr__(self):
        return f'Polynomial({self})'


def _merge(left, right, key, combine):
    """
    Merges two strictly descending term tuples, combining the coefficients of
    equal monomials and dropping zeros
    """
    result = []
    i = j = 0
    while i < len(left) and j < len(right):
        a, ca = left[i]
        b, cb = right[j]
        if a == b:
            c = combine(ca, cb)
            if c:
                result.append((a, c))
            i += 1
            j += 1
        elif key(a) > key(b):
            result.append(left[i])
            i += 1
        else:
            result.append(right[j])
            j += 1
    result.extend(left[i:])
    result.extend(right[j:])
    return tuple(result)


def format_monomial(exponents, variables):
    factors = []
    for name, e in zip(variables, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f'{name}^{e}')
    return '*'.join(factors)


def format_terms(terms, variables, field):
    """Renders terms in the polynomial text grammar, e.g. ``x^2*y - 1/2*z + 3``"""
    if not terms:
        return '0'
    pieces = []
    for exponents, coeff in terms:
        text = field.to_text(coeff)
        negative = text.startswith('-')
        if negative:
            text = text[1:]
        mono = format_monomial(exponents, variables)
        if mono and text == '1':
            body = mono
        elif mono:
            body = f'{text}*{mono}'
        else:
            body = text
        if not pieces:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(pieces)
