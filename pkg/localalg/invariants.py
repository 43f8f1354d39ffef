"""
Local invariants of a validated algebra at its irrelevant maximal ideal.

Everything is computed on the minimal presentation ``S/I`` (no relation has
a linear part, so ``S`` has ``embdim`` variables):

    * ``dim`` from the lead ideal of ``I``
    * ``depth`` as ``embdim - pd_S(S/I)`` from the minimal resolution
      (graded mode), 0 for local-mode (Artinian) algebras
    * ``mu`` as the minimal number of generators of ``I`` (``epsilon2`` is
      read off the resolution)
    * ``type`` as the socle dimension after cutting a maximal regular
      sequence of random linear forms

The length of that sequence and the Betti numbers give second measurements
of depth, type and the flags, which the report cross-checks.
"""
import json
import logging
import random
from math import comb
from threading import RLock

from cachetools import LRUCache, cached
from cachetools.keys import hashkey
from frozendict import frozendict

from groebner import FreeSubmodule, Ideal, trim
from groebner.ideal import colon, maximal_ideal
from groebner.utils import logged_computation
from localalg.consts import DEFAULT_SEED, GRADED, INFINITY, \
    RATIONAL_COEFFICIENT_BOUND, REGULAR_SEQUENCE_RETRIES, REPORT_CACHE_SIZE, \
    REPORT_FIELDS
from localalg.exceptions import NegativeDefect, RegularSequenceNotFound, \
    ReportInconsistency
from localalg.flatness import flatness_certificate
from localalg.presentation import mu_local
from localalg.resolution import minimal_resolution

logger = logging.getLogger(__name__)


def _minimal(a):
    return a.minimal.presentation


def dim(a):
    """Krull dimension"""
    return a.ideal.krull_dim()


def embdim(a):
    """``dim_k m/m^2``: the variable count of the minimal presentation"""
    return len(_minimal(a).variables)


def mu_relations(a):
    """Minimal number of generators of the minimal relation ideal"""
    presentation = _minimal(a)
    if presentation.mode == GRADED:
        module = FreeSubmodule(presentation.ring, 1,
                               [(r,) for r in presentation.relations])
        return len(trim(module))
    return mu_local(presentation.ideal)


epsilon2 = mu_relations


@cached(cache=LRUCache(maxsize=REPORT_CACHE_SIZE),
        key=lambda a: hashkey(a.presentation), lock=RLock())
def resolution(a):
    """Minimal free resolution of the minimal presentation (graded mode)"""
    presentation = _minimal(a)
    return minimal_resolution(presentation.ring, presentation.relations)


def betti_numbers(a):
    return resolution(a).betti


def projective_dimension(a):
    return resolution(a).length


def depth(a):
    """
    ``embdim - pd`` by Auslander-Buchsbaum for graded algebras; 0 for
    Artinian ones
    """
    if a.mode != GRADED or dim(a) == 0:
        return 0
    return embdim(a) - projective_dimension(a)


def random_linear_form(ring, rng):
    """A non-zero linear form with coefficients drawn from ``rng``"""
    field = ring.field
    while True:
        coefficients = [field.random_element(rng, RATIONAL_COEFFICIENT_BOUND)
                        for _ in ring.variables]
        if any(coefficients):
            break
    form = ring.zero
    for c, v in zip(coefficients, ring.gens()):
        form = form + v.scale(c)
    return form


def is_regular_on(ideal, element):
    """``element`` is a non-zero-divisor on ``ring/ideal``: ``(I : f) = I``"""
    quotient = colon(ideal, Ideal(ideal.ring, [element]))
    return quotient.issubset(ideal)


def has_socle(ideal):
    """
    The maximal ideal is associated to ``ring/ideal``: ``(I : m) != I``.
    For a homogeneous ideal this is exactly depth 0
    """
    quotient = colon(ideal, maximal_ideal(ideal.ring))
    return not quotient.issubset(ideal)


def regular_sequence(a, length=None, seed=DEFAULT_SEED):
    """
    Random linear forms certified to be a regular sequence on the minimal
    presentation by colon tests. Without ``length`` the sequence is extended
    until the maximal ideal becomes associated, so it is maximal and its
    length is the depth; local-mode algebras are Artinian and get none
    :return: tuple of linear forms of the minimal presentation's ring
    """
    presentation = _minimal(a)
    if length is None and presentation.mode != GRADED:
        return ()
    rng = random.Random(seed)
    ideal = presentation.ideal
    found = []
    while True:
        if length is None:
            if has_socle(ideal):
                break
        elif len(found) == length:
            break
        position = len(found)
        for attempt in range(REGULAR_SEQUENCE_RETRIES):
            theta = random_linear_form(presentation.ring, rng)
            if is_regular_on(ideal, theta):
                break
            logger.debug(f'Draw {attempt + 1} at position {position + 1} ' +
                         f'is a zero-divisor on {a.name}')
        else:
            raise RegularSequenceNotFound(a.name, position,
                                          REGULAR_SEQUENCE_RETRIES)
        if attempt > REGULAR_SEQUENCE_RETRIES // 2:
            logger.warning(f'Regular element for {a.name} found only after ' +
                           f'{attempt + 1} draws')
        found.append(theta)
        ideal = Ideal(ideal.ring, ideal.generators + (theta,))
    return tuple(found)


def socle_dim(ideal, graded=True):
    """
    ``dim_k (I : m)/I`` for an ideal of a polynomial ring. Graded ideals are
    handled by trimming; otherwise ``ring/I`` must be Artinian
    """
    ring = ideal.ring
    quotient = colon(ideal, maximal_ideal(ring))
    if graded:
        base = FreeSubmodule(ring, 1, [(g,) for g in ideal.generators])
        module = FreeSubmodule(ring, 1, [(g,) for g in quotient.generators])
        return len(trim(module, base))
    return ideal.vector_space_dim() - quotient.vector_space_dim()


def algebra_type(a, seed=DEFAULT_SEED, sequence=None):
    """
    ``dim_k Ext^depth(k, A)``: the socle dimension of ``A`` modulo a
    maximal regular sequence
    """
    presentation = _minimal(a)
    if sequence is None:
        sequence = regular_sequence(a, seed=seed)
    ideal = Ideal(presentation.ring,
                  presentation.ideal.generators + tuple(sequence))
    return socle_dim(ideal, graded=presentation.mode == GRADED)


def cid(a):
    """``mu - embdim + dim``"""
    value = mu_relations(a) - embdim(a) + dim(a)
    if value < 0:
        raise NegativeDefect(a.name, value)
    return value


def idd(a, seed=DEFAULT_SEED):
    """``depth`` for Gorenstein algebras, infinite otherwise"""
    t = depth(a)
    if dim(a) == t and algebra_type(a, seed) == 1:
        return t
    return INFINITY


class InvariantReport:
    """
    The invariant vector of one local algebra. ``values()`` holds the stable
    fields; ``flat_certificate``, ``betti`` and ``regular_sequence`` are kept
    for auditing.

    Fields that are not given are derived from the given ones by their
    defining identities. ``report`` passes every value it measures, so that
    ``consistency_violations`` compares independent computations
    """

    def __init__(self, name, dim, depth, embdim, mu, type, cid=None,
                 epsilon2=None, flat_certificate=None, betti=None,
                 regular_sequence=None, codepth=None, codim=None, cm=None,
                 gorenstein=None, ci=None, regular=None, aci=None, idd=None):
        self.name = name
        self.dim = dim
        self.depth = depth
        self.codepth = dim - depth if codepth is None else codepth
        self.embdim = embdim
        self.codim = embdim - dim if codim is None else codim
        self.mu = mu
        self.epsilon2 = mu if epsilon2 is None else epsilon2
        self.cid = mu - embdim + dim if cid is None else cid
        self.type = type
        self.cm = self.codepth == 0 if cm is None else cm
        self.gorenstein = self.cm and type == 1 \
            if gorenstein is None else gorenstein
        self.ci = self.cid == 0 if ci is None else ci
        self.regular = self.codim == 0 if regular is None else regular
        self.aci = self.cid == 1 if aci is None else aci
        if idd is None:
            idd = depth if self.gorenstein else INFINITY
        self.idd = idd
        self.flat_certificate = flat_certificate
        self.betti = None if betti is None else tuple(betti)
        self.regular_sequence = None if regular_sequence is None \
            else tuple(regular_sequence)

    def values(self):
        return frozendict({field: getattr(self, field)
                           for field in REPORT_FIELDS})

    def to_json(self):
        """JSON-ready mapping; infinity is written as ``"inf"``"""
        data = {field: ('inf' if value == INFINITY else value)
                for field, value in self.values().items()}
        data['flat_certificate'] = str(self.flat_certificate) \
            if self.flat_certificate is not None else None
        return data

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=False)

    def differences(self, other):
        """Fields on which two reports disagree"""
        mine, theirs = self.values(), other.values()
        return tuple(f for f in REPORT_FIELDS if mine[f] != theirs[f])

    def __eq__(self, other):
        return isinstance(other, InvariantReport) and \
            self.values() == other.values()

    def __hash__(self):
        return hash(self.values())

    def __repr__(self):
        inner = ', '.join(f'{k} {v}' for k, v in self.values().items())
        return f'InvariantReport({self.name}: {inner})'


def koszul_betti(n):
    """Betti numbers of the Koszul complex on ``n`` elements"""
    return tuple(comb(n, i) for i in range(n + 1))


def _resolution_violations(report):
    betti = report.betti
    pd = len(betti) - 1
    failures = []
    # Auslander-Buchsbaum over the minimal presentation's polynomial ring
    if report.depth != report.embdim - pd:
        failures.append('depth = embdim - pd')
    if report.epsilon2 != (betti[1] if pd else 0):
        failures.append('epsilon2 = first betti number')
    if report.cm and report.type != betti[-1]:
        failures.append('type = last betti number when cm')
    if report.ci and betti != koszul_betti(report.mu):
        failures.append('ci => koszul betti numbers')
    return failures


def consistency_violations(report):
    """
    Names of the report identities that fail; empty when consistent. Besides
    the defining identities, the measured depth is compared with the length
    of the recorded regular sequence and, when Betti numbers are recorded,
    with the projective dimension, and the type with the last Betti number
    """
    failures = []
    if report.codepth != report.dim - report.depth or report.codepth < 0:
        failures.append('codepth = dim - depth >= 0')
    if report.codim != report.embdim - report.dim or report.codim < 0:
        failures.append('codim = embdim - dim >= 0')
    if report.epsilon2 != report.cid + report.codim:
        failures.append('epsilon2 = cid + codim')
    if report.epsilon2 != report.mu:
        failures.append('epsilon2 = mu')
    if report.cm != (report.codepth == 0):
        failures.append('cm = (codepth = 0)')
    if report.gorenstein != (report.cm and report.type == 1):
        failures.append('gorenstein = cm and type 1')
    if report.ci != (report.cid == 0) or report.aci != (report.cid == 1):
        failures.append('ci = (cid = 0), aci = (cid = 1)')
    if report.regular != (report.codim == 0):
        failures.append('regular = (codim = 0)')
    chain = (not report.regular or report.ci) and \
            (not report.ci or report.gorenstein) and \
            (not report.gorenstein or report.cm)
    if not chain or report.type < 1:
        failures.append('regular => ci => gorenstein => cm')
    expected_idd = report.depth if report.gorenstein else INFINITY
    if report.idd != expected_idd:
        failures.append('idd = depth if gorenstein else inf')
    if report.regular_sequence is not None and \
            len(report.regular_sequence) != report.depth:
        failures.append('depth = length of a maximal regular sequence')
    if report.betti is not None:
        failures.extend(_resolution_violations(report))
    return failures


def _report_key(a, seed=DEFAULT_SEED):
    return hashkey(a.presentation, seed)


@cached(cache=LRUCache(maxsize=REPORT_CACHE_SIZE), key=_report_key,
        lock=RLock())
@logged_computation
def report(a, seed=DEFAULT_SEED):
    """
    Full invariant report of a validated algebra; every report identity is
    checked before returning.

    Each flag is measured on its own path: ``cm`` from the length of a
    maximal regular sequence, ``regular`` from the relations of the minimal
    presentation, ``gorenstein`` from the last Betti number (graded) or the
    socle (local); ``epsilon2`` is the first Betti number in graded mode
    :param a: ``LocalAlgebra``
    :param seed: seed of the random linear forms
    :return: ``InvariantReport``
    """
    d, e, mu = dim(a), embdim(a), mu_relations(a)
    if mu - e + d < 0:
        raise NegativeDefect(a.name, mu - e + d)
    sequence = regular_sequence(a, seed=seed)
    r = algebra_type(a, seed, sequence)
    cm = len(sequence) == d
    if a.mode == GRADED:
        betti = betti_numbers(a)
        epsilon2 = betti[1] if len(betti) > 1 else 0
        gorenstein = cm and betti[-1] == 1
    else:
        betti, epsilon2, gorenstein = None, mu, cm and r == 1
    result = InvariantReport(a.name, d, depth(a), e, mu, r, cid=mu - e + d,
                             epsilon2=epsilon2,
                             flat_certificate=flatness_certificate(
                                 a.presentation),
                             betti=betti, regular_sequence=sequence, cm=cm,
                             gorenstein=gorenstein, regular=mu == 0)
    violations = consistency_violations(result)
    if violations:
        raise ReportInconsistency(a.name, violations[0])
    logger.debug(f'Report of {a.name}: {dict(result.values())}')
    return result
