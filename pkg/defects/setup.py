"""
Tensor setups: a base ``R``, two algebras ``A`` and ``B`` over it and their
tensor product ``P``, all viewed at their irrelevant maximal ideals, with
the certificates and invariant reports every theorem check reads.
"""
import logging
from functools import cached_property

from frozendict import frozendict

from defects.consts import FLAT_A, FLAT_B, FLAT_BOTH
from defects.exceptions import CertificateMissing
from localalg.consts import DEFAULT_SEED
from localalg.exceptions import BaseMismatch
from localalg.flatness import flatness_certificate, smoothness_certificate
from localalg.invariants import InvariantReport, report
from localalg.presentation import fiber, validate
from localalg.tensor import fiber_dim, irrelevant_prime, tensor_product

logger = logging.getLogger(__name__)


def field_report(name='field'):
    """Invariant report of the prime field: every invariant is 0, type 1"""
    return InvariantReport(name, 0, 0, 0, 0, 1)


def base_report(base, seed=DEFAULT_SEED):
    """Report of a base ring; a ``FieldBase`` gets the field report"""
    if base.is_field:
        return field_report(base.name)
    return report(validate(base.presentation), seed)


def fiber_report(presentation, seed=DEFAULT_SEED):
    """Report of ``A / m_R A``; over a field base this is ``A`` itself"""
    if presentation.base.is_field:
        return report(validate(presentation), seed)
    return report(validate(fiber(presentation)), seed)


class TensorSetup:
    """
    ``(R, A, B, P = A (x)_R B)`` with the flatness certificates of the
    factors. ``flat_side`` names the certified factor (``A``, ``B`` or
    ``both``); checks that need one flat factor use ``flat`` and ``other``

    :param a: ``AlgebraPresentation``
    :param b: ``AlgebraPresentation`` over the same base
    :param seed: seed of every randomized invariant computation
    :param name: label used in logs, results and bundles
    :param prime_pairs: candidate prime pairs for the non-triviality check
    """

    def __init__(self, a, b, seed=DEFAULT_SEED, name=None, prime_pairs=None):
        if a.base != b.base:
            raise BaseMismatch(a.name, b.name)
        self.name = name or f'{a.name}-{b.name}'
        self.seed = seed
        self.prime_pairs = prime_pairs
        self.base = a.base
        self.a = a
        self.b = b
        self.certificate_a = flatness_certificate(a)
        self.certificate_b = flatness_certificate(b)
        if self.certificate_a is not None and self.certificate_b is not None:
            self.flat_side = FLAT_BOTH
        elif self.certificate_a is not None:
            self.flat_side = FLAT_A
        elif self.certificate_b is not None:
            self.flat_side = FLAT_B
        else:
            raise CertificateMissing(self.name)
        self.A = validate(a)
        self.B = validate(b)
        self.product = tensor_product(a, b)
        self.P = validate(self.product)
        logger.debug(f'Setup {self.name}: flat side {self.flat_side} over ' +
                     f'{self.base.name}')

    @property
    def flat(self):
        """The factor carrying the flatness certificate (``A`` first)"""
        return self.b if self.flat_side == FLAT_B else self.a

    @property
    def other(self):
        return self.a if self.flat_side == FLAT_B else self.b

    @property
    def both_flat(self):
        return self.flat_side == FLAT_BOTH

    @property
    def certificates(self):
        return frozendict({'A': self.certificate_a, 'B': self.certificate_b})

    @cached_property
    def smooth_certificate(self):
        """
        ``(factor, certificate)`` for the first flat factor that is also
        formally smooth over the base, or None
        """
        for presentation, certificate in ((self.a, self.certificate_a),
                                          (self.b, self.certificate_b)):
            if certificate is None:
                continue
            smooth = smoothness_certificate(presentation)
            if smooth is not None:
                return presentation, smooth
        return None

    @cached_property
    def report_R(self):
        return base_report(self.base, self.seed)

    @cached_property
    def report_A(self):
        return report(self.A, self.seed)

    @cached_property
    def report_B(self):
        return report(self.B, self.seed)

    @cached_property
    def report_P(self):
        return report(self.P, self.seed)

    @cached_property
    def report_flat_fiber(self):
        """Report of ``F / nF`` for the flat factor ``F``"""
        return fiber_report(self.flat, self.seed)

    @cached_property
    def report_other_fiber(self):
        """Report of ``O / nO`` when the other factor is flat too"""
        if not self.both_flat:
            return None
        return fiber_report(self.other, self.seed)

    @property
    def report_flat(self):
        return self.report_B if self.flat_side == FLAT_B else self.report_A

    @property
    def report_other(self):
        return self.report_A if self.flat_side == FLAT_B else self.report_B

    @cached_property
    def fiber_dim(self):
        """Fiber term at the irrelevant primes of ``A`` and ``B``"""
        return fiber_dim(self.a, irrelevant_prime(self.a),
                         self.b, irrelevant_prime(self.b))

    def operands(self):
        return frozendict({'R': self.base.name, 'A': self.a.name,
                           'B': self.b.name})

    def swapped(self):
        """The setup with the factors exchanged"""
        pairs = None if self.prime_pairs is None else \
            [(q, p) for p, q in self.prime_pairs]
        return TensorSetup(self.b, self.a, self.seed,
                           f'{self.b.name}-{self.a.name}', pairs)

    def __repr__(self):
        return f'TensorSetup({self.name}, flat {self.flat_side})'
