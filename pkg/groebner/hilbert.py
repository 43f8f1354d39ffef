"""
Hilbert series and Krull dimension of monomial ideals.

For a monomial ideal ``I`` of ``k[x_1..x_n]`` the Hilbert series of
``k[x]/I`` is ``N(T) / (1 - T)^n`` for an integer polynomial ``N``. The
numerator is computed by splitting on a pivot variable:

    N(I) = N(I + (x)) + T * N(I : x)

until the generators are pairwise coprime, where ``N = prod(1 - T^deg g)``.
Polynomials in ``T`` are tuples of integer coefficients, constant term first.
"""
import logging
from itertools import combinations
from math import comb

from groebner.exceptions import NonMonomialIdealError
from groebner.orders import monomial_divides, monomial_support

logger = logging.getLogger(__name__)


def _trim(coefficients):
    coefficients = list(coefficients)
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def _add(a, b):
    size = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(size))


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_t_power(d):
    out = [0] * (d + 1)
    out[0] += 1
    out[d] -= 1
    return _trim(out)


def minimal_generators(monomials):
    """Drops exponent tuples divisible by another one (keeps one copy)"""
    result = []
    for m in sorted(set(monomials), key=lambda e: (sum(e), e)):
        if not any(monomial_divides(g, m) for g in result):
            result.append(m)
    return result


def _numerator(generators):
    generators = minimal_generators(generators)
    if not generators:
        return (1,)
    if any(not any(g) for g in generators):
        return (0,)
    counts = {}
    coprime = True
    for a, b in combinations(generators, 2):
        shared = monomial_support(a) & monomial_support(b)
        if shared:
            coprime = False
            for i in shared:
                counts[i] = counts.get(i, 0) + 1
    if coprime:
        result = (1,)
        for g in generators:
            result = _mul(result, _one_minus_t_power(sum(g)))
        return result
    pivot = max(sorted(counts), key=lambda i: counts[i])
    variable = tuple(1 if i == pivot else 0 for i in range(len(generators[0])))
    with_pivot = [g for g in generators if not g[pivot]] + [variable]
    colon = [tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g))
             for g in generators]
    return _add(_numerator(with_pivot), _mul((0, 1), _numerator(colon)))


class HilbertSeries:
    """
    The rational function ``numerator(T) / (1 - T)^nvars``
    """

    def __init__(self, numerator, nvars):
        self.numerator = _trim(numerator)
        self.nvars = nvars

    def reduced(self):
        """
        Cancels every ``(1 - T)`` factor; returns ``(h, d)`` with the series
        equal to ``h(T) / (1 - T)^d`` and ``h(1) != 0`` (or ``h = 0``)
        """
        h, d = list(self.numerator), self.nvars
        while d > 0 and any(h) and sum(h) == 0:
            # synthetic division by (1 - T): q_i = sum_{j <= i} h_j
            quotient, running = [], 0
            for c in h[:-1]:
                running += c
                quotient.append(running)
            h, d = quotient or [0], d - 1
        return _trim(h), d

    def dimension(self):
        """Pole order at ``T = 1``; -1 for the zero ring"""
        h, d = self.reduced()
        if not any(h):
            return -1
        return d

    def coefficient(self, degree):
        """Number of standard monomials of the given degree"""
        n = self.nvars
        if n == 0:
            return self.numerator[degree] if degree < len(self.numerator) \
                else 0
        return sum(c * comb(degree - i + n - 1, n - 1)
                   for i, c in enumerate(self.numerator) if i <= degree)

    def total(self):
        """Vector-space dimension of the quotient; None when infinite"""
        h, d = self.reduced()
        if d > 0 and any(h):
            return None
        return sum(h)

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and \
            self.reduced() == other.reduced()

    def __hash__(self):
        return hash(self.reduced())

    def __repr__(self):
        return f'HilbertSeries({list(self.numerator)} / (1-T)^{self.nvars})'


def _monomial_exponents(lead):
    exponents = []
    for g in lead.generators:
        if not g.is_monomial():
            raise NonMonomialIdealError(g)
        exponents.append(g.leading_monomial())
    return exponents


def hilbert_series(lead, nvars=None):
    """
    Hilbert series of ``k[x]/lead`` for a monomial ideal ``lead``
    :param lead: ``Ideal`` with monomial generators
    :param nvars: variable count; defaults to the ideal's ring
    :return: ``HilbertSeries``
    """
    nvars = lead.ring.nvars if nvars is None else nvars
    return HilbertSeries(_numerator(_monomial_exponents(lead)), nvars)


def krull_dim_monomial(lead, nvars=None):
    """
    Krull dimension of ``k[x]/lead``: the size of a largest set of variables
    containing the support of no generator. -1 for the unit ideal
    """
    nvars = lead.ring.nvars if nvars is None else nvars
    supports = [monomial_support(e) for e in
                minimal_generators(_monomial_exponents(lead))]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0
