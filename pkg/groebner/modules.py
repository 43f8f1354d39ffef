"""
Submodules of free modules ``R^r``: module orders, Groebner bases of
submodules, syzygies and degree-by-degree trimming of graded generators.

A vector is a tuple of ``r`` polynomials of one ring. Internally it is the
engine form of ``groebner.buchberger``: terms ``((position, e_1..e_n), c)``.
"""
import logging
from itertools import groupby

from groebner.buchberger import BuchbergerEngine
from groebner.consts import MODULE_ORDER_KINDS, POSITION_OVER_TERM, \
    SCHREYER, TERM_OVER_POSITION
from groebner.exceptions import GroebnerError, RingMismatchError
from groebner.linalg import independent_subset
from groebner.polynomial import Polynomial
from groebner.utils import logged_computation

logger = logging.getLogger(__name__)


class ModuleOrder:
    """
    Order on the monomials ``m * e_i`` of a free module, extending the term
    order of the ring.

        * ``pot``: position first (``e_0 > e_1 > ...``), then the term
        * ``top``: term first, then position
        * ``schreyer``: ``m * e_i`` is compared through ``m * leads[i]`` in
          the order ``head`` of another free module, ties broken by position
    """

    def __init__(self, term_order, kind=POSITION_OVER_TERM, leads=None,
                 head=None):
        if kind not in MODULE_ORDER_KINDS:
            raise ValueError(f'Unknown module order "{kind}"')
        if kind == SCHREYER and (leads is None or head is None):
            raise ValueError('A Schreyer order needs leading monomials and ' +
                             'the order they are compared in')
        self.term_order = term_order
        self.kind = kind
        self.leads = tuple(leads) if leads is not None else None
        self.head = head

    @classmethod
    def schreyer(cls, generators_leads, head):
        return cls(head.term_order, SCHREYER, generators_leads, head)

    def key(self, mono):
        position, exponents = mono[0], mono[1:]
        if self.kind == POSITION_OVER_TERM:
            return -position, self.term_order.key(exponents)
        if self.kind == TERM_OVER_POSITION:
            return self.term_order.key(exponents), -position
        lead = self.leads[position]
        shifted = (lead[0],) + tuple(a + b for a, b in zip(lead[1:], exponents))
        return self.head.key(shifted), -position

    def __eq__(self, other):
        return isinstance(other, ModuleOrder) and \
            (self.term_order, self.kind, self.leads) == \
            (other.term_order, other.kind, other.leads)

    def __hash__(self):
        return hash((self.term_order, self.kind, self.leads))

    def __repr__(self):
        return f'ModuleOrder({self.kind}, {self.term_order!r})'


class EliminationModuleOrder:
    """
    Order on ``R^(r + m)`` in which every monomial of the first ``r``
    positions beats every monomial of the last ``m``. The head block uses
    position-over-term; the tail block uses ``tail`` (shifted by ``r``)
    """

    def __init__(self, rank, term_order, tail):
        self.rank = rank
        self.term_order = term_order
        self.tail = tail

    def key(self, mono):
        if mono[0] < self.rank:
            return 1, -mono[0], self.term_order.key(mono[1:])
        return 0, self.tail.key((mono[0] - self.rank,) + mono[1:])


def vector_to_engine(vector, order_key=None):
    terms = []
    for position, f in enumerate(vector):
        terms.extend(((position,) + e, c) for e, c in f.terms)
    if order_key is not None:
        terms.sort(key=lambda t: order_key(t[0]), reverse=True)
    return terms


def engine_to_vector(terms, ring, rank):
    components = [[] for _ in range(rank)]
    for mono, c in terms:
        components[mono[0]].append((mono[1:], c))
    key = ring.order.key
    return tuple(Polynomial(ring, tuple(sorted(comp, key=lambda t: key(t[0]),
                                               reverse=True)))
                 for comp in components)


def vector_degree(vector, degrees):
    """
    Degree of a homogeneous vector in the graded free module whose basis
    vectors have the given degrees; None for the zero vector
    """
    for f, shift in zip(vector, degrees):
        if f:
            return f.degree() + shift
    return None


def is_homogeneous_vector(vector, degrees):
    found = {d + shift for f, shift in zip(vector, degrees) if f
             for d in {sum(e) for e, _ in f.terms}}
    return len(found) <= 1


class FreeSubmodule:
    """
    Submodule of ``R^rank`` given by generator vectors. ``degrees`` are the
    degrees of the basis vectors of ``R^rank`` (all zero unless the module
    sits inside a graded resolution)
    """

    def __init__(self, ring, rank, generators=(), degrees=None):
        self.ring = ring
        self.rank = rank
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != rank:
                raise ValueError(f'Vector of length {len(g)} in a free ' +
                                 f'module of rank {rank}')
            for f in g:
                if f.ring != ring:
                    raise RingMismatchError(ring, f.ring)
            gens.append(g)
        self.generators = tuple(gens)
        self.degrees = tuple(degrees) if degrees is not None else (0,) * rank

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        vectors = ', '.join('(' + ', '.join(str(f) for f in g) + ')'
                            for g in self.generators)
        return f'FreeSubmodule(rank {self.rank}: {vectors})'

    def nonzero(self):
        return FreeSubmodule(self.ring, self.rank,
                             [g for g in self.generators if any(g)],
                             self.degrees)

    def is_zero(self):
        return not any(any(g) for g in self.generators)

    def generator_degrees(self):
        return tuple(vector_degree(g, self.degrees) for g in self.generators)

    def is_homogeneous(self):
        return all(is_homogeneous_vector(g, self.degrees)
                   for g in self.generators)

    def groebner_basis(self, order=None):
        return module_groebner(self, order)

    def contains(self, vector):
        return not any(self.groebner_basis().normal_form(vector))

    def apply(self, coefficients):
        """
        Image of a coefficient vector under the map ``R^len(self) -> R^rank``
        sending the i-th basis vector to the i-th generator
        """
        result = [self.ring.zero] * self.rank
        for c, g in zip(coefficients, self.generators):
            if c:
                result = [r + c * f for r, f in zip(result, g)]
        return tuple(result)


class ModuleGroebnerBasis:
    """Groebner basis of a ``FreeSubmodule`` for a module order"""

    def __init__(self, module, order, elements):
        self.module = module
        self.ring = module.ring
        self.rank = module.rank
        self.order = order
        self._engine_elements = [list(e) for e in elements]
        self.elements = tuple(engine_to_vector(e, self.ring, self.rank)
                              for e in elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self):
        return tuple(e[0][0] for e in self._engine_elements)

    def normal_form(self, vector):
        engine = BuchbergerEngine(self.ring.field, self.order.key,
                                  rank_one=self.rank == 1)
        remainder = engine.reduce(vector_to_engine(vector, self.order.key),
                                  self._engine_elements)
        return engine_to_vector(remainder, self.ring, self.rank)

    def contains(self, vector):
        return not any(self.normal_form(vector))


@logged_computation
def module_groebner(module, order=None):
    """
    Reduced Groebner basis of a submodule
    :param module: ``FreeSubmodule``
    :param order: module order (``ModuleOrder`` or
        ``EliminationModuleOrder``); position-over-term by default
    :return: ``ModuleGroebnerBasis``
    """
    if order is None:
        order = ModuleOrder(module.ring.order)
    engine = BuchbergerEngine(module.ring.field, order.key,
                              rank_one=module.rank == 1)
    vectors = [vector_to_engine(g, order.key) for g in module.generators]
    elements = engine.complete([v for v in vectors if v])
    logger.debug(f'Module basis of rank {module.rank}: {len(elements)} ' +
                 'elements')
    return ModuleGroebnerBasis(module, order, elements)


def lead_of(vector, order):
    terms = vector_to_engine(vector, order.key)
    return terms[0][0] if terms else None


@logged_computation
def syzygies(module, schreyer=True):
    """
    Generators of the kernel of ``R^k -> R^r`` sending the i-th basis vector
    to the i-th generator of ``module``.

    The vectors ``(g_i, e_i)`` of ``R^(r + k)`` are completed under an order
    in which the first ``r`` positions dominate; the basis elements that
    vanish on those positions generate the kernel. The tail block is ordered
    by the Schreyer order induced by the generators (position-over-term when
    ``schreyer`` is False)
    :param module: ``FreeSubmodule``
    :return: ``FreeSubmodule`` of ``R^k``; basis degrees are the generator
        degrees of ``module``
    """
    ring, r = module.ring, module.rank
    k = len(module.generators)
    degrees = tuple(d if d is not None else 0
                    for d in module.generator_degrees())
    if k == 0:
        return FreeSubmodule(ring, 0, (), ())
    head = ModuleOrder(ring.order)
    if schreyer:
        unit = (0,) + ring.unit_exponents()
        leads = [lead_of(g, head) or unit for g in module.generators]
        tail = ModuleOrder.schreyer(leads, head)
    else:
        tail = ModuleOrder(ring.order)
    order = EliminationModuleOrder(r, ring.order, tail)
    one, zero = ring.one, ring.zero
    extended = FreeSubmodule(ring, r + k, [
        tuple(g) + tuple(one if j == i else zero for j in range(k))
        for i, g in enumerate(module.generators)])
    basis = module_groebner(extended, order)
    kernel = [vector[r:] for vector, lead in
              zip(basis.elements, basis.leading_monomials()) if lead[0] >= r]
    logger.debug(f'{len(kernel)} syzygies of {k} generators in rank {r}')
    return FreeSubmodule(ring, k, kernel, degrees)


def trim(module, base=None):
    """
    Minimal generating subset of a graded submodule, chosen degree by degree:
    a generator is kept when its normal form modulo everything kept in lower
    degrees (plus ``base``) is linearly independent of the normal forms kept
    so far in its own degree.
    :param module: homogeneous ``FreeSubmodule``
    :param base: optional homogeneous ``FreeSubmodule`` of the same free
        module; generators lying in ``base`` are discarded
    :return: ``FreeSubmodule`` with the kept generators
    """
    if not module.is_homogeneous() or \
            (base is not None and not base.is_homogeneous()):
        raise GroebnerError('trim needs homogeneous generators')
    field = module.ring.field
    base_gens = list(base.generators) if base is not None else []
    candidates = [(vector_degree(g, module.degrees), n, g)
                  for n, g in enumerate(module.generators) if any(g)]
    candidates.sort(key=lambda t: (t[0], t[1]))
    kept = []
    for _, group in groupby(candidates, key=lambda t: t[0]):
        group = [g for _, _, g in group]
        current = FreeSubmodule(module.ring, module.rank, base_gens + kept,
                                module.degrees)
        if current.generators:
            basis = module_groebner(current)
            forms = [basis.normal_form(g) for g in group]
        else:
            forms = group
        sparse = [{(pos,) + e: c for pos, f in enumerate(v)
                   for e, c in f.terms} for v in forms]
        nonzero = [n for n, v in enumerate(sparse) if v]
        chosen = independent_subset([sparse[n] for n in nonzero], field)
        kept.extend(group[nonzero[i]] for i in chosen)
    return FreeSubmodule(module.ring, module.rank, kept, module.degrees)
