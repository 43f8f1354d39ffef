"""
Machine certificates for flatness and formal smoothness of an algebra over
its base, and the Tor_1 computation behind the graded local criterion.
"""
import logging

from groebner import FreeSubmodule, Ideal, syzygies
from localalg.consts import AFFINE, FIELD_BASE, PERFECT_FIELD_BASE, \
    POLYNOMIAL_EXTENSION, TOR1_VANISHES, USER_ASSERTED
from localalg.exceptions import AffineModeRefused

logger = logging.getLogger(__name__)


class FlatnessCertificate:
    """
    Evidence that an algebra is flat (or formally smooth) over its base.
    ``kind`` is one of ``FieldBase``, ``PolynomialExtension``,
    ``Tor1Vanishes``, ``UserAsserted`` or ``PerfectFieldBase``; ``witness``
    carries data supporting it
    """

    def __init__(self, kind, witness=None):
        self.kind = kind
        self.witness = witness

    @property
    def machine_checked(self):
        return self.kind != USER_ASSERTED

    def __eq__(self, other):
        return isinstance(other, FlatnessCertificate) and \
            self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __str__(self):
        return self.kind

    def __repr__(self):
        return f'FlatnessCertificate({self.kind})'


class Tor1Result:
    """
    ``Tor_1^R(A, k)`` as a quotient of submodules of ``S^r``; ``witnesses``
    are kernel vectors whose classes are non-zero
    """

    def __init__(self, vanishes, witnesses=()):
        self.vanishes = vanishes
        self.witnesses = tuple(witnesses)

    def __bool__(self):
        return not self.vanishes

    def __repr__(self):
        if self.vanishes:
            return 'Tor1Result(zero)'
        return f'Tor1Result(nonzero, {len(self.witnesses)} witnesses)'


def _project(module, rank):
    return [vector[:rank] for vector in module.generators]


def tor1_over_base(presentation):
    """
    ``Tor_1^R(A, k)`` for ``R`` the base and ``k`` its residue field.

    With ``t`` the base variables and ``S`` the ambient polynomial ring,
    ``Tor_1`` is ``K / N`` where ``K`` holds the vectors ``a`` of ``S^r``
    with ``sum a_i t_i`` in ``I_A``, and ``N`` is spanned by the lifted
    syzygies of ``t`` over ``R`` together with ``I_A S^r``
    :param presentation: graded or local ``AlgebraPresentation``
    :return: ``Tor1Result``
    """
    if presentation.mode == AFFINE:
        raise AffineModeRefused(presentation.name)
    base = presentation.base
    if base.is_field:
        return Tor1Result(True)
    ring = presentation.ring
    rank = len(base.variables)
    ts = [ring.gen(v) for v in base.variables]
    base_relations = [r.to_ring(ring) for r in base.relations]
    relations = list(presentation.relations)

    def first_syzygies(extra):
        module = FreeSubmodule(ring, 1, [(f,) for f in ts + extra])
        return _project(syzygies(module), rank)

    kernel = first_syzygies(relations)
    zero = ring.zero
    spread = [tuple(g if j == i else zero for j in range(rank))
              for g in relations for i in range(rank)]
    image = FreeSubmodule(ring, rank, first_syzygies(base_relations) + spread)
    if image.generators:
        basis = image.groebner_basis()
        witnesses = [v for v in kernel if any(basis.normal_form(v))]
    else:
        witnesses = [v for v in kernel if any(v)]
    logger.debug(f'Tor_1 of {presentation.name} over {base.name}: ' +
                 f'{len(witnesses)} of {len(kernel)} kernel generators survive')
    return Tor1Result(not witnesses, witnesses)


def is_polynomial_extension(presentation):
    """
    True when ``A = R[x]``: every relation involves only base variables and
    lies in the base relation ideal
    """
    base = presentation.base
    ring = presentation.ring
    base_indices = frozenset(range(len(base.variables)))
    base_ideal = Ideal(ring, [r.to_ring(ring) for r in base.relations])
    for r in presentation.own_relations():
        if not r.support() <= base_indices or not base_ideal.contains(r):
            return False
    return True


def flatness_certificate(presentation):
    """
    Strongest available flatness certificate, tried in the order FieldBase,
    PolynomialExtension, Tor1Vanishes, then a user assertion from the input
    :return: ``FlatnessCertificate`` or None
    """
    if presentation.base.is_field:
        return FlatnessCertificate(FIELD_BASE)
    if is_polynomial_extension(presentation):
        return FlatnessCertificate(POLYNOMIAL_EXTENSION)
    if presentation.mode != AFFINE:
        tor = tor1_over_base(presentation)
        if tor.vanishes:
            return FlatnessCertificate(TOR1_VANISHES, tor)
    if presentation.user_flat:
        logger.warning(f'Flatness of {presentation.name} over ' +
                       f'{presentation.base.name} is only user-asserted')
        return FlatnessCertificate(USER_ASSERTED)
    return None


def smoothness_certificate(presentation):
    """
    Formal smoothness evidence: a polynomial extension of the base, or a
    prime (hence perfect) base field
    :return: ``FlatnessCertificate`` or None
    """
    if is_polynomial_extension(presentation):
        return FlatnessCertificate(POLYNOMIAL_EXTENSION)
    if presentation.base.is_field:
        return FlatnessCertificate(PERFECT_FIELD_BASE)
    return None
