"""
Ideals of polynomial rings and the operations built on Groebner bases:
sums, products, intersections, colon ideals and elimination.
"""
import logging

from groebner.buchberger import buchberger
from groebner.exceptions import NotDivisibleError, RingMismatchError
from groebner.hilbert import hilbert_series, krull_dim_monomial
from groebner.orders import MonomialOrder, monomial_divides, \
    monomial_quotient
from groebner.polynomial import PolynomialRing
from groebner.utils import logged_computation

logger = logging.getLogger(__name__)


class Ideal:
    """
    Ideal of ``ring`` given by generators. Zero generators are dropped;
    the generator order given by the caller is kept
    """

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(ring, g.ring)
            if g:
                gens.append(g)
        self.generators = tuple(gens)

    @classmethod
    def parse(cls, ring, texts):
        return cls(ring, [ring.parse(t) for t in texts])

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f'({", ".join(str(g) for g in self.generators)})'

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and \
            self.generators == other.generators

    def __hash__(self):
        return hash((self.ring, self.generators))

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)

    def groebner_basis(self, order=None):
        return buchberger(self, order)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def contains(self, f):
        if f.ring != self.ring:
            raise RingMismatchError(self.ring, f.ring)
        return self.groebner_basis().contains(f)

    __contains__ = contains

    def normal_form(self, f):
        return self.groebner_basis().normal_form(f)

    def is_unit(self):
        return self.groebner_basis().is_unit()

    def is_zero(self):
        return not self.generators

    def issubset(self, other):
        self._check(other)
        basis = other.groebner_basis()
        return all(basis.contains(g) for g in self.generators)

    def equals(self, other):
        """Equality as ideals (same reduced Groebner basis)"""
        self._check(other)
        return self.groebner_basis() == other.groebner_basis()

    def leading_ideal(self):
        basis = self.groebner_basis()
        return Ideal(self.ring, [self.ring.monomial(m)
                                 for m in basis.leading_monomials()])

    def hilbert_series(self):
        return hilbert_series(self.leading_ideal())

    def krull_dim(self):
        return krull_dim_monomial(self.leading_ideal())

    def vector_space_dim(self):
        """``dim_k ring/self``, or None when it is infinite"""
        return self.hilbert_series().total()

    def to_ring(self, ring):
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def colon(self, other):
        return colon(self, other)

    def intersection(self, other):
        return intersection(self, other)

    def eliminate(self, keep):
        return eliminate(self, keep)


def ideal_sum(a, b):
    """``a + b`` by generator concatenation"""
    a._check(b)
    return Ideal(a.ring, a.generators + b.generators)


def ideal_product(a, b):
    """``a * b`` by pairwise products of generators"""
    a._check(b)
    return Ideal(a.ring, [f * g for f in a.generators for g in b.generators])


def power(ideal, n):
    """``ideal^n``; the unit ideal for n = 0"""
    result = Ideal(ideal.ring, [ideal.ring.one])
    for _ in range(n):
        result = ideal_product(result, ideal)
    return result


def maximal_ideal(ring):
    """The irrelevant ideal generated by all variables"""
    return Ideal(ring, ring.gens())


def _fresh_name(ring, stem='_aux'):
    name, n = stem, 0
    while name in ring.index:
        n += 1
        name = f'{stem}{n}'
    return name


def exact_quotient(h, g):
    """
    ``h / g`` for ``h`` a multiple of ``g``; raises ``NotDivisibleError``
    otherwise
    """
    field = h.ring.field
    g_coeff, g_lead = g.leading_term()
    quotient = h.ring.zero
    remainder = h
    while remainder:
        coeff, lead = remainder.leading_term()
        if not monomial_divides(g_lead, lead):
            raise NotDivisibleError(h, g)
        term = h.ring.monomial(monomial_quotient(lead, g_lead),
                               field.div(coeff, g_coeff))
        quotient = quotient + term
        remainder = remainder - g * term
    return quotient


@logged_computation
def eliminate(ideal, keep):
    """
    ``ideal`` intersected with the subring on the variables ``keep``,
    computed with an elimination block order
    :param ideal: ``Ideal``
    :param keep: iterable of variable names to keep
    :return: ``Ideal`` of the polynomial ring on the kept variables (in the
        original variable order, with grevlex unless the source ring is lex)
    """
    ring = ideal.ring
    keep = set(keep)
    unknown = keep - set(ring.variables)
    if unknown:
        raise ValueError(f'Cannot keep unknown variables {sorted(unknown)}')
    kept = tuple(v for v in ring.variables if v in keep)
    dropped = tuple(v for v in ring.variables if v not in keep)
    target_order = ring.order if ring.order.kind == 'lex' else \
        MonomialOrder.grevlex()
    target = ring.with_variables(kept, target_order)
    if not dropped:
        return ideal.to_ring(target)
    work = PolynomialRing(ring.field, dropped + kept,
                          MonomialOrder.elimination(len(dropped)))
    basis = Ideal(work, [g.to_ring(work) for g in ideal.generators]) \
        .groebner_basis()
    block = len(dropped)
    survivors = [g for g in basis.elements
                 if not any(any(e[:block]) for e, _ in g.terms)]
    logger.debug(f'Eliminated {dropped}: {len(survivors)} of ' +
                 f'{len(basis)} basis elements survive')
    return Ideal(target, [g.to_ring(target) for g in survivors])


def intersection(a, b):
    """``a`` intersected with ``b``, via ``(u*a + (1-u)*b)`` with ``u`` eliminated"""
    a._check(b)
    ring = a.ring
    name = _fresh_name(ring)
    bigger = ring.with_variables((name,) + ring.variables)
    u = bigger.gen(name)
    generators = [u * g.to_ring(bigger) for g in a.generators] + \
                 [(1 - u) * g.to_ring(bigger) for g in b.generators]
    result = eliminate(Ideal(bigger, generators), ring.variables)
    return result.to_ring(ring)


def colon(i, j):
    """
    ``(i : j) = {f : f*j in i}``, the intersection over the generators ``g``
    of ``j`` of ``(i intersected with (g)) / g``
    """
    i._check(j)
    ring = i.ring
    quotients = []
    for g in j.generators:
        meet = intersection(i, Ideal(ring, [g]))
        quotients.append(Ideal(ring, [exact_quotient(h, g)
                                      for h in meet.generators]))
    if not quotients:
        return Ideal(ring, [ring.one])
    result = quotients[0]
    for quotient in quotients[1:]:
        result = intersection(result, quotient)
    return result
