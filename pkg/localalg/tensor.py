"""
Tensor products of presentations over a common base, triviality of the
product and contraction of ideals to the base.
"""
import logging

from frozendict import frozendict

from groebner import Ideal
from groebner.ideal import eliminate, maximal_ideal
from localalg.consts import AFFINE, GRADED, LOCAL, TENSOR_JOIN
from localalg.exceptions import BaseMismatch
from localalg.presentation import AlgebraPresentation

logger = logging.getLogger(__name__)


def disjoint_renaming(taken, variables, reserved=()):
    """
    Renaming map for ``variables`` avoiding the names in ``taken``; clashing
    names get the first suffix ``_1``, ``_2``, ... that is also outside
    ``reserved``
    """
    used = set(taken) | set(variables) | set(reserved)
    mapping = {}
    for v in variables:
        if v not in taken:
            continue
        n = 1
        while f'{v}_{n}' in used:
            n += 1
        mapping[v] = f'{v}_{n}'
        used.add(mapping[v])
    return frozendict(mapping)


def product_mode(left, right):
    if AFFINE in (left, right):
        return AFFINE
    if left == right == GRADED:
        return GRADED
    return LOCAL


def tensor_product(a, b, name=None):
    """
    ``A (x)_R B`` presented on the base variables, the variables of ``a`` and
    the variables of ``b`` (renamed where they clash with ``a``), with the
    relations of both factors
    :param a: ``AlgebraPresentation``
    :param b: ``AlgebraPresentation`` over the same base
    :param name: optional name; ``<A>_tensor_<B>`` by default
    :return: ``AlgebraPresentation``
    """
    if a.base != b.base:
        raise BaseMismatch(a.name, b.name)
    mapping = disjoint_renaming(a.variables, b.variables, a.base.variables)
    if mapping:
        logger.debug(f'Renaming {dict(mapping)} in {b.name} for the tensor ' +
                     f'product with {a.name}')
        b = b.renamed(mapping)
    variables = a.variables + b.variables
    product = AlgebraPresentation(name or f'{a.name}{TENSOR_JOIN}{b.name}',
                                  a.base, variables, (),
                                  product_mode(a.mode, b.mode))
    relations = [r.to_ring(product.ring) for r in a.relations + b.relations]
    return product.with_relations(relations)


def tensor_is_trivial(presentation):
    """True when 1 lies in the relation ideal, i.e. the algebra is zero"""
    return presentation.ideal.is_unit()


def as_ideal(presentation, q):
    if isinstance(q, Ideal):
        return q.to_ring(presentation.ring)
    ring = presentation.ring
    return Ideal(ring, [ring.parse(g) if isinstance(g, str) else g.to_ring(ring)
                        for g in q])


def contract_to_base(presentation, q=()):
    """
    ``q`` contracted to the base: the non-base variables are eliminated from
    ``q`` plus the relations
    :param presentation: ``AlgebraPresentation`` (any mode)
    :param q: ``Ideal`` or generators (polynomials or text) in the
        presentation's ring
    :return: ``Ideal`` of the polynomial ring on the base variables
    """
    q = as_ideal(presentation, q)
    combined = Ideal(presentation.ring, q.generators + presentation.relations)
    return eliminate(combined, presentation.base.variables)


def irrelevant_prime(presentation):
    return maximal_ideal(presentation.ring)


def fiber_dim(a, p, b, q):
    """
    Minimum of ``dim A/p`` and ``dim B/q``; the primes are user-asserted and
    their primality is not verified
    """
    a = getattr(a, 'presentation', a)
    b = getattr(b, 'presentation', b)
    p, q = as_ideal(a, p), as_ideal(b, q)
    left = (a.ideal + p).krull_dim()
    right = (b.ideal + q).krull_dim()
    return min(left, right)
