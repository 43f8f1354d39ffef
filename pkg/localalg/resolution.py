"""
Minimal graded free resolutions of ``S/I`` over the polynomial ring ``S``
"""
import logging

from groebner import FreeSubmodule, syzygies, trim
from groebner.utils import logged_computation

logger = logging.getLogger(__name__)


class Resolution:
    """
    ``0 <- S/I <- S <- F_1 <- F_2 <- ...``; ``steps[i]`` is the image of
    ``F_(i+1)``, given by minimal generators
    """

    def __init__(self, ring, steps):
        self.ring = ring
        self.steps = tuple(steps)

    @property
    def betti(self):
        """Total Betti numbers ``(1, b_1, ..., b_pd)``"""
        return (1,) + tuple(len(step) for step in self.steps)

    @property
    def length(self):
        return len(self.steps)

    def graded_betti(self):
        """``{(i, degree): count}`` for the free modules ``F_i``, ``i >= 1``"""
        table = {}
        for i, step in enumerate(self.steps, start=1):
            for d in step.generator_degrees():
                table[(i, d)] = table.get((i, d), 0) + 1
        return table

    def __repr__(self):
        return f'Resolution(betti={list(self.betti)})'


@logged_computation
def minimal_resolution(ring, relations):
    """
    Minimal free resolution of ``ring / (relations)`` for homogeneous
    relations: trimmed generators, then repeated trimmed syzygies until the
    kernel vanishes
    :param ring: ``PolynomialRing``
    :param relations: homogeneous polynomials of ``ring``
    :return: ``Resolution``
    """
    current = trim(FreeSubmodule(ring, 1, [(r,) for r in relations if r]))
    steps = []
    while current.generators:
        steps.append(current)
        kernel = syzygies(current).nonzero()
        if kernel.is_zero():
            break
        current = trim(kernel)
    logger.debug(f'Resolution of length {len(steps)} over {ring!r}: ' +
                 f'betti {[1] + [len(s) for s in steps]}')
    return Resolution(ring, steps)
