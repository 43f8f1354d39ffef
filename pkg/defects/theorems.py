"""
Executable transfer identities for tensor products of local algebras.

Every check computes both sides of one identity (or biconditional) on the
reports of a ``TensorSetup`` and returns a ``TheoremCheckResult``. With ``F``
the flat factor, ``O`` the other one and ``n`` the maximal ideal of the base
``R``, the checked statements are

    * ``lambda(P) = lambda(A) + lambda(B) - lambda(R)`` (+ fiber term for
      dim and depth) and ``lambda(P) = lambda(F/nF) + lambda(O)`` for
      dim, depth, codepth and cid
    * ``idd(P) = idd(F/nF) + idd(O)`` (+ fiber term)
    * ``type(P) = type(A) * type(B) / type(R) = type(F/nF) * type(O)``
    * codim, embdim and epsilon2 additivity under a smoothness certificate
    * the CM, Gorenstein, type 1, regular, CI and ACI biconditionals
"""
import logging

from frozendict import frozendict

from defects.consts import ADDITIVE_INVARIANTS, CID, CODEPTH, CODIM, DEPTH, \
    DIM, EMBDIM, EPSILON2, EQUIVALENCES, FLAT, IDD, \
    MULTIPLICATIVE_INVARIANTS, NONTRIVIAL, SMOOTH_ADDITIVE_INVARIANTS, TYPE
from defects.exceptions import CertificateMissing, DivisibilityViolation, \
    UnknownTheorem
from defects.setup import base_report, fiber_report
from localalg.consts import AFFINE, DEFAULT_SEED, INFINITY
from localalg.exceptions import BaseMismatch
from localalg.flatness import flatness_certificate, smoothness_certificate
from localalg.invariants import report
from localalg.presentation import validate
from localalg.tensor import as_ideal, contract_to_base, irrelevant_prime, \
    tensor_is_trivial, tensor_product

logger = logging.getLogger(__name__)


def render_value(value):
    """Text form of a check value: ``inf``, ``true``/``false`` or the integer"""
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value == INFINITY:
        return 'inf'
    return str(value)


def json_value(value):
    if not isinstance(value, bool) and value == INFINITY:
        return 'inf'
    return value


class TheoremCheckResult:
    """
    One evaluated identity: ``passed`` is ``lhs == rhs`` unless given.
    ``subchecks`` hold the alternative forms and biconditionals evaluated on
    the same operands
    """

    def __init__(self, theorem, lhs, rhs, operands=None, subchecks=(),
                 passed=None):
        self.theorem = theorem
        self.lhs = lhs
        self.rhs = rhs
        self.passed = lhs == rhs if passed is None else passed
        self.operands = frozendict(operands or {})
        self.subchecks = tuple(subchecks)

    @property
    def ok(self):
        """True when this result and every sub-result pass"""
        return self.passed and all(s.ok for s in self.subchecks)

    def flatten(self):
        """This result followed by every sub-result, depth first"""
        results = [self]
        for sub in self.subchecks:
            results.extend(sub.flatten())
        return results

    def line(self):
        verdict = 'PASS' if self.passed else 'FAIL'
        return f'{self.theorem}: lhs {render_value(self.lhs)} ' + \
               f'rhs {render_value(self.rhs)} {verdict}'

    def to_json(self):
        data = {'theorem': self.theorem,
                'lhs': json_value(self.lhs),
                'rhs': json_value(self.rhs),
                'pass': self.passed,
                'operands': dict(self.operands)}
        if self.subchecks:
            data['subchecks'] = [s.to_json() for s in self.subchecks]
        return data

    def __repr__(self):
        return f'TheoremCheckResult({self.line()})'


def _sub(theorem, lhs, rhs, setup):
    return TheoremCheckResult(theorem, lhs, rhs, setup.operands())


def _combination(setup, field):
    """``field(A) + field(B) - field(R)``"""
    return getattr(setup.report_A, field) + getattr(setup.report_B, field) - \
        getattr(setup.report_R, field)


def _fiber_form(setup, field):
    """``field(F/nF) + field(O)``"""
    return getattr(setup.report_flat_fiber, field) + \
        getattr(setup.report_other, field)


def _additive_check(setup, field, fiber_term=0, subchecks=()):
    lhs = getattr(setup.report_P, field)
    fiber = _sub(f'{field}/fiber', lhs, _fiber_form(setup, field) + fiber_term,
                 setup)
    return TheoremCheckResult(field, lhs,
                              _combination(setup, field) + fiber_term,
                              setup.operands(), (fiber,) + tuple(subchecks))


def check_dim(setup):
    """``dim P = dim A + dim B - dim R + fiber term``"""
    return _additive_check(setup, 'dim', setup.fiber_dim)


def check_depth(setup):
    return _additive_check(setup, 'depth', setup.fiber_dim)


def check_codepth(setup):
    return _additive_check(setup, 'codepth')


def check_idd(setup):
    """
    ``idd(P) = idd(F/nF) + idd(O) + fiber term``; infinite as soon as one
    side has a non-Gorenstein operand
    """
    lhs = setup.report_P.idd
    rhs = setup.report_flat_fiber.idd + setup.report_other.idd + \
        setup.fiber_dim
    return TheoremCheckResult(IDD, lhs, rhs, setup.operands())


def check_type(setup):
    """
    ``type(P) = type(A) * type(B) / type(R)``, plus the fiber form
    ``type(P) = type(F/nF) * type(O)``
    :raises DivisibilityViolation: when ``type(R)`` does not divide the
        product of the factor types
    """
    numerator = setup.report_A.type * setup.report_B.type
    denominator = setup.report_R.type
    if numerator % denominator:
        raise DivisibilityViolation(setup.name, numerator, denominator)
    lhs = setup.report_P.type
    fiber = _sub('type/fiber', lhs, setup.report_flat_fiber.type *
                 setup.report_other.type, setup)
    return TheoremCheckResult(TYPE, lhs, numerator // denominator,
                              setup.operands(), (fiber,))


def _aci_both_flat(r, a, b):
    return (r.aci and a.aci and b.aci) or (r.ci and a.ci and b.aci) or \
        (r.ci and b.ci and a.aci)


def check_cid(setup):
    """
    ``cid(P) = cid(A) + cid(B) - cid(R)`` with the complete and almost
    complete intersection biconditionals as sub-results
    """
    p, r = setup.report_P, setup.report_R
    fiber, other = setup.report_flat_fiber, setup.report_other
    flat = setup.report_flat
    subchecks = [
        _sub('cid/ci-fiber', p.ci, fiber.ci and other.ci, setup),
        _sub('cid/ci-base-defect', p.ci, other.ci and flat.cid == r.cid,
             setup),
        _sub('cid/aci-fiber', p.aci, (fiber.ci and other.aci) or
             (fiber.aci and other.ci), setup),
    ]
    if setup.both_flat:
        a, b = setup.report_A, setup.report_B
        subchecks.append(_sub('cid/ci-both-flat', p.ci, a.ci and b.ci, setup))
        subchecks.append(_sub('cid/aci-both-flat', p.aci,
                              _aci_both_flat(r, a, b), setup))
    return _additive_check(setup, 'cid', subchecks=subchecks)


def _require_smooth(setup):
    if setup.smooth_certificate is None:
        raise CertificateMissing(setup.name, 'smoothness')
    return setup.smooth_certificate


def check_embdim(setup):
    """``embdim P = embdim A + embdim B - embdim R`` (fiber term 0)"""
    _require_smooth(setup)
    return TheoremCheckResult(EMBDIM, setup.report_P.embdim,
                              _combination(setup, 'embdim'),
                              setup.operands())


def check_codim(setup):
    """
    ``codim P = codim A + codim B - codim R`` for a formally smooth flat
    factor; the embdim identity is attached as a sub-result
    :raises CertificateMissing: without a smoothness certificate
    """
    _require_smooth(setup)
    embdim = _sub('codim/embdim', setup.report_P.embdim,
                  _combination(setup, 'embdim'), setup)
    return TheoremCheckResult(CODIM, setup.report_P.codim,
                              _combination(setup, 'codim'),
                              setup.operands(), (embdim,))


def check_epsilon2(setup):
    """
    ``epsilon2`` is additive exactly when ``codim`` is; under a smoothness
    certificate the ``epsilon2`` identity itself is checked as well
    """
    p = setup.report_P
    additive = p.epsilon2 == _combination(setup, 'epsilon2')
    codim_additive = p.codim == _combination(setup, 'codim')
    if setup.smooth_certificate is None:
        return _sub(EPSILON2, additive, codim_additive, setup)
    equivalence = _sub('epsilon2/codim-additivity', additive,
                       codim_additive, setup)
    return TheoremCheckResult(EPSILON2, p.epsilon2,
                              _combination(setup, 'epsilon2'),
                              setup.operands(), (equivalence,))


def _smooth_reports(setup):
    presentation, _ = setup.smooth_certificate
    if presentation is setup.a:
        return setup.report_A, setup.report_B, presentation
    return setup.report_B, setup.report_A, presentation


def check_equivalences(setup):
    """
    The Cohen-Macaulay, Gorenstein, type 1 and regularity biconditionals of
    the product against its factors. Variants whose hypotheses fail on the
    setup are skipped
    :return: list of ``TheoremCheckResult``
    """
    p, r = setup.report_P, setup.report_R
    a, b = setup.report_A, setup.report_B
    flat, other = setup.report_flat, setup.report_other
    fiber = setup.report_flat_fiber
    field_base = setup.base.is_field
    results = [
        _sub('cm/fiber', p.cm, fiber.cm and other.cm, setup),
        _sub('cm/codepth', p.cm, other.cm and flat.codepth == r.codepth,
             setup),
    ]
    if setup.both_flat:
        results.append(_sub('cm/both-flat', p.cm, a.cm and b.cm, setup))
    if r.cm:
        results.append(_sub('cm/base-cm', p.cm, flat.cm and other.cm, setup))
    results.append(_sub('gorenstein/fiber', p.gorenstein,
                        fiber.gorenstein and other.gorenstein, setup))
    if r.gorenstein:
        results.append(_sub('gorenstein/base-gorenstein', p.gorenstein,
                            flat.gorenstein and other.gorenstein, setup))
    results.append(_sub('type1/fiber', p.type == 1,
                        fiber.type == 1 and other.type == 1, setup))
    if field_base:
        results.append(_sub('type1/field-base', p.type == 1,
                            a.type == 1 and b.type == 1, setup))
        results.append(_sub('regular/field-base', p.regular,
                            a.regular and b.regular, setup))
    if setup.smooth_certificate is not None:
        smooth, rest, presentation = _smooth_reports(setup)
        smooth_fiber = fiber_report(presentation, setup.seed)
        results.append(_sub('regular/factors-regular',
                            not (a.regular and b.regular) or p.regular, True,
                            setup))
        results.append(_sub('regular/fiber', p.regular,
                            smooth_fiber.regular and rest.regular, setup))
        results.append(_sub('regular/codim', p.regular,
                            rest.regular and smooth.codim == r.codim, setup))
    return results


def _as_presentation(a):
    return getattr(a, 'presentation', a)


def _flat_operands(r, presentation):
    return {'R': r.name, 'A': presentation.name,
            'B': f'{presentation.name}_fiber'}


def _flat_reports(r, a, seed):
    presentation = _as_presentation(a)
    if presentation.base != r:
        raise BaseMismatch(r.name, presentation.name)
    if flatness_certificate(presentation) is None:
        raise CertificateMissing(presentation.name)
    return (presentation, base_report(r, seed),
            report(validate(presentation), seed),
            fiber_report(presentation, seed))


def check_flat_type(r, a, seed=DEFAULT_SEED):
    """
    ``type(A) = type(R) * type(A/m_R A)`` for ``A`` flat over ``R``, with
    the type 1 biconditional as a sub-result
    :param r: ``BaseAlgebra`` or ``FieldBase``
    :param a: ``AlgebraPresentation`` or ``LocalAlgebra`` over ``r``
    """
    presentation, base, whole, fiber = _flat_reports(r, a, seed)
    operands = _flat_operands(r, presentation)
    unit = TheoremCheckResult('flat/type1', whole.type == 1,
                              base.type == 1 and fiber.type == 1, operands)
    return TheoremCheckResult('flat/type', whole.type,
                              base.type * fiber.type, operands, (unit,))


def check_flat_lambda(kind, r, a, seed=DEFAULT_SEED):
    """
    ``lambda(A) = lambda(R) + lambda(A/m_R A)`` for ``A`` flat over ``R``;
    ``type`` is checked multiplicatively, ``epsilon2`` and ``codim`` need a
    formally smooth ``A``
    :param kind: invariant name
    """
    if kind in MULTIPLICATIVE_INVARIANTS:
        return check_flat_type(r, a, seed)
    if kind not in ADDITIVE_INVARIANTS + SMOOTH_ADDITIVE_INVARIANTS:
        raise UnknownTheorem(f'{FLAT}/{kind}')
    presentation, base, whole, fiber = _flat_reports(r, a, seed)
    if kind in SMOOTH_ADDITIVE_INVARIANTS and \
            smoothness_certificate(presentation) is None:
        raise CertificateMissing(presentation.name, 'smoothness')
    return TheoremCheckResult(f'{FLAT}/{kind}', getattr(whole, kind),
                              getattr(base, kind) + getattr(fiber, kind),
                              _flat_operands(r, presentation))


def check_flat(setup):
    """Flat-map axioms for every certified factor of a setup"""
    results = []
    for presentation, certificate in ((setup.a, setup.certificate_a),
                                      (setup.b, setup.certificate_b)):
        if certificate is None:
            continue
        kinds = ADDITIVE_INVARIANTS
        if smoothness_certificate(presentation) is not None:
            kinds = kinds + SMOOTH_ADDITIVE_INVARIANTS
        results.append(check_flat_type(setup.base, presentation, setup.seed))
        for kind in kinds:
            results.append(check_flat_lambda(kind, setup.base, presentation,
                                             setup.seed))
    return results


def check_nontrivial(a, b, prime_pairs=None):
    """
    ``A (x)_R B`` is non-zero exactly when some prime of ``A`` and some
    prime of ``B`` contract to the same prime of ``R``.

    The candidate primes are user-asserted and their primality is not
    verified; a pair whose contraction is the unit ideal never counts
    :param a: ``AlgebraPresentation`` (affine mode allowed)
    :param b: ``AlgebraPresentation`` over the same base
    :param prime_pairs: ``(p, q)`` pairs of ideals or generator lists; by
        default the irrelevant primes, or the zero ideals when a factor is
        affine
    """
    product = tensor_product(a, b)
    if prime_pairs is None:
        if AFFINE in (a.mode, b.mode):
            prime_pairs = [((), ())]
        else:
            prime_pairs = [(irrelevant_prime(a), irrelevant_prime(b))]
    agreeing = False
    for p, q in prime_pairs:
        left = contract_to_base(a, as_ideal(a, p))
        right = contract_to_base(b, as_ideal(b, q))
        logger.debug(f'Contractions for {a.name}, {b.name}: {left!r} and ' +
                     f'{right!r}')
        if not left.is_unit() and left.equals(right):
            agreeing = True
            break
    operands = {'R': a.base.name, 'A': a.name, 'B': b.name}
    return TheoremCheckResult(NONTRIVIAL, not tensor_is_trivial(product),
                              agreeing, operands)


# checks that take a TensorSetup, in suite order
SETUP_CHECKS = {
    DIM: check_dim,
    DEPTH: check_depth,
    CODEPTH: check_codepth,
    IDD: check_idd,
    TYPE: check_type,
    CID: check_cid,
    CODIM: check_codim,
    EPSILON2: check_epsilon2,
    EMBDIM: check_embdim,
    EQUIVALENCES: check_equivalences,
    FLAT: check_flat,
}
