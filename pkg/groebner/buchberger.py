"""
Buchberger's algorithm for ideals and for submodules of free modules.

The engine works on *vectors*: lists of ``(monomial, coefficient)`` pairs,
strictly descending under a sort key, where a monomial is the flat tuple
``(position, e_1, ..., e_n)``. An ideal is a submodule of rank one, so every
element has position 0. Multipliers (monomials of the ring acting on a
vector) carry position 0 as well, which lets products and quotients be
plain component-wise additions and subtractions.

Pairs are pruned with the Gebauer-Moeller installation of Buchberger's
criteria and selected with the normal strategy (smallest lcm first). The
coprime-lead criterion is only applied to rank-one input, where it is valid.
"""
import logging
from operator import add, le, sub
from threading import RLock

from cachetools import LRUCache, cached

from groebner.consts import GROEBNER_CACHE_SIZE
from groebner.exceptions import OrderMismatchError, RingMismatchError
from groebner.orders import MonomialOrder
from groebner.utils import logged_computation

logger = logging.getLogger(__name__)


def divides(a, b):
    return a[0] == b[0] and all(map(le, a, b))


def lcm(a, b):
    return tuple(map(max, a, b))


def coprime(a, b):
    return not any(x and y for x, y in zip(a[1:], b[1:]))


class BuchbergerEngine:
    """
    Reduction and completion of vectors over ``field`` under the monomial
    sort ``key``
    """

    def __init__(self, field, key, rank_one=True):
        self.field = field
        cache = {}

        def memo_key(mono):
            found = cache.get(mono)
            if found is None:
                found = cache[mono] = key(mono)
            return found

        self.key = memo_key
        self.rank_one = rank_one
        self.reductions_to_zero = 0

    # -- vector arithmetic ------------------------------------------------

    def monic(self, f):
        field = self.field
        inv = field.inv(f[0][1])
        return [(m, field.mul(c, inv)) for m, c in f]

    def shift(self, f, multiplier):
        return [(tuple(map(add, m, multiplier)), c) for m, c in f]

    def axpy(self, f, g, scalar, multiplier):
        """Returns ``f + scalar * multiplier * g``"""
        field, key = self.field, self.key
        mul, addc = field.mul, field.add
        shifted = [(tuple(map(add, m, multiplier)), mul(scalar, c))
                   for m, c in g]
        result = []
        i = j = 0
        nf, ng = len(f), len(shifted)
        while i < nf and j < ng:
            a, ca = f[i]
            b, cb = shifted[j]
            if a == b:
                c = addc(ca, cb)
                if c:
                    result.append((a, c))
                i += 1
                j += 1
            elif key(a) > key(b):
                result.append(f[i])
                i += 1
            else:
                result.append(shifted[j])
                j += 1
        result.extend(f[i:])
        result.extend(shifted[j:])
        return result

    def reduce(self, f, basis):
        """
        Full normal form of ``f``: no term of the result is divisible by the
        leading monomial of a basis element
        """
        field = self.field
        remainder = []
        while f:
            mono, coeff = f[0]
            for g in basis:
                lead, lead_coeff = g[0]
                if divides(lead, mono):
                    scalar = field.neg(field.div(coeff, lead_coeff))
                    f = self.axpy(f, g, scalar, tuple(map(sub, mono, lead)))
                    break
            else:
                remainder.append(f[0])
                f = f[1:]
        return remainder

    def spoly(self, f, g, pair_lcm):
        # both inputs are monic
        left = self.shift(f, tuple(map(sub, pair_lcm, f[0][0])))
        return self.axpy(left, g, self.field.neg(self.field.one),
                         tuple(map(sub, pair_lcm, g[0][0])))

    # -- completion ---------------------------------------------------------

    def update(self, basis, pairs, new):
        """
        Gebauer-Moeller update after appending ``basis[new]``; mutates
        ``pairs`` in place
        """
        key = self.key
        lead_new = basis[new][0][0]

        def chain_drops(pair):
            pair_lcm, i, j = pair
            return divides(lead_new, pair_lcm) and \
                pair_lcm != lcm(basis[i][0][0], lead_new) and \
                pair_lcm != lcm(basis[j][0][0], lead_new)

        pairs[:] = [p for p in pairs if not chain_drops(p)]

        classes = {}
        for i in range(new):
            lead = basis[i][0][0]
            if lead[0] == lead_new[0]:
                classes.setdefault(lcm(lead, lead_new), []).append(i)
        minimal = []
        for pair_lcm in sorted(classes, key=key):
            if any(divides(m, pair_lcm) for m in minimal):
                continue
            minimal.append(pair_lcm)
            members = classes[pair_lcm]
            if self.rank_one and any(coprime(basis[i][0][0], lead_new)
                                     for i in members):
                continue
            pairs.append((pair_lcm, members[0], new))

    def complete(self, generators):
        """
        Runs Buchberger's algorithm on non-zero vectors and returns the
        reduced Groebner basis, sorted by descending leading monomial
        """
        key = self.key
        basis = []
        pairs = []
        generators = sorted((self.monic(g) for g in generators if g),
                            key=lambda v: key(v[0][0]))
        if self.rank_one and generators and not any(generators[0][0][0][1:]):
            return [generators[0][:1]]
        for g in generators:
            basis.append(g)
            self.update(basis, pairs, len(basis) - 1)
        processed = 0
        while pairs:
            best = min(range(len(pairs)),
                       key=lambda n: (key(pairs[n][0]), pairs[n][1],
                                      pairs[n][2]))
            pair_lcm, i, j = pairs.pop(best)
            processed += 1
            remainder = self.reduce(self.spoly(basis[i], basis[j], pair_lcm),
                                    basis)
            if not remainder:
                self.reductions_to_zero += 1
                continue
            basis.append(self.monic(remainder))
            if self.rank_one and not any(remainder[0][0][1:]):
                logger.debug('Unit ideal detected')
                return [basis[-1]]
            self.update(basis, pairs, len(basis) - 1)
        logger.debug(f'Processed {processed} pairs, ' +
                     f'{self.reductions_to_zero} reduced to zero')
        return self.interreduce(basis)

    def interreduce(self, basis):
        key = self.key
        minimal = []
        for g in sorted(basis, key=lambda v: key(v[0][0])):
            if not any(divides(h[0][0], g[0][0]) for h in minimal):
                minimal.append(g)
        reduced = []
        for n, g in enumerate(minimal):
            others = minimal[:n] + minimal[n + 1:]
            head = [g[0]]
            tail = self.reduce(g[1:], others)
            reduced.append(head + tail)
        return sorted(reduced, key=lambda v: key(v[0][0]), reverse=True)


class GroebnerBasis:
    """
    Reduced Groebner basis of an ideal of ``ring`` for the ring's monomial
    order. Elements are monic, auto-reduced and sorted by descending leading
    monomial, hence unique for a given ideal and order
    """

    def __init__(self, ring, elements, reduced=True):
        self.ring = ring
        self.order = ring.order
        self.elements = tuple(elements)
        self.reduced = reduced

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and \
            self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return f'GroebnerBasis({", ".join(str(e) for e in self.elements)})'

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self):
        return not self.elements

    def leading_monomials(self):
        return tuple(e.leading_monomial() for e in self.elements)

    def _engine(self):
        return BuchbergerEngine(self.ring.field, _term_key(self.order))

    def normal_form(self, f):
        """
        Remainder of ``f`` on division by the basis; zero exactly when ``f``
        belongs to the ideal
        """
        if f.ring.order != self.order:
            raise OrderMismatchError(self.order, f.ring.order)
        if f.ring != self.ring:
            raise RingMismatchError(self.ring, f.ring)
        engine = self._engine()
        remainder = engine.reduce(to_vector(f), [to_vector(g)
                                                 for g in self.elements])
        return from_vector(remainder, self.ring)

    def contains(self, f):
        return not self.normal_form(f)

    def is_standard(self, exponents):
        """True if no leading monomial divides ``exponents``"""
        return not any(all(map(le, lead, exponents))
                       for lead in self.leading_monomials())


def _term_key(order):
    return lambda mono: order.key(mono[1:])


def to_vector(f, position=0):
    return [((position,) + e, c) for e, c in f.terms]


def from_vector(vector, ring):
    from groebner.polynomial import Polynomial
    return Polynomial(ring, tuple((m[1:], c) for m, c in vector))


def _cache_key(ring, generators):
    return ring, tuple(sorted(g.terms for g in generators))


@cached(cache=LRUCache(maxsize=GROEBNER_CACHE_SIZE), key=_cache_key,
        lock=RLock())
@logged_computation
def _reduced_basis(ring, generators):
    engine = BuchbergerEngine(ring.field, _term_key(ring.order))
    vectors = engine.complete([to_vector(g) for g in generators])
    logger.info(f'Caching Groebner basis of {len(generators)} generators ' +
                f'in {ring!r} ({len(vectors)} elements)')
    return GroebnerBasis(ring, [from_vector(v, ring) for v in vectors])


def buchberger(ideal, order=None):
    """
    Reduced Groebner basis of ``ideal``
    :param ideal: an ``Ideal`` (or any object with ``ring`` and
        ``generators``)
    :param order: optional ``MonomialOrder``; the generators are moved into
        the same ring with that order first
    :return: ``GroebnerBasis`` for the ring (with the requested order)
    """
    ring = ideal.ring
    generators = tuple(g for g in ideal.generators if g)
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        generators = tuple(g.to_ring(ring) for g in generators)
    return _reduced_basis(ring, generators)


def groebner_basis(polynomials, order=None):
    """Reduced Groebner basis of the ideal generated by ``polynomials``"""
    polynomials = tuple(polynomials)
    if not polynomials:
        raise ValueError('Cannot infer the ring of an empty generator list')
    ring = polynomials[0].ring
    generators = tuple(p for p in polynomials if p)
    if order is None:
        order = ring.order
    if order != ring.order:
        ring = ring.with_order(order)
        generators = tuple(g.to_ring(ring) for g in generators)
    return _reduced_basis(ring, generators)


__all__ = ['BuchbergerEngine', 'GroebnerBasis', 'MonomialOrder', 'buchberger',
           'groebner_basis', 'to_vector', 'from_vector']
