import os
import random
from unittest import TestCase, main

from defects.consts import FLAT
from defects.corpus import load_corpus
from defects.setup import TensorSetup
from defects.suite import run_suite

SAMPLE_DATA = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir,
                           os.pardir, 'sample_data')


def outcome(suite):
    return [(r.theorem, r.lhs, r.rhs, r.passed) for r in suite.flatten()]


def top_level(suite):
    """Top-level results; the per-factor flat checks as an unordered set"""
    checks = [(r.theorem, r.lhs, r.rhs, r.passed) for r in suite.results
              if not r.theorem.startswith(FLAT)]
    flat = sorted((r.theorem, r.operands['A'], r.lhs, r.rhs, r.passed)
                  for r in suite.results if r.theorem.startswith(FLAT))
    return checks, flat


def rename_own(presentation, tag):
    return presentation.renamed({v: f'{v}{tag}'
                                 for v in presentation.variables})


def permute_own(presentation, rng):
    own = list(presentation.own_relations())
    rng.shuffle(own)
    return presentation.with_relations(own)


def add_redundant(presentation):
    own = presentation.own_relations()
    return presentation.with_relations(list(own) + [own[0] * own[0]])


class MetamorphicTests(TestCase):
    """
    Tests that results do not change under renaming of variables,
    reordering of relations, redundant relations or exchange of the factors
    """

    def transformed(self, s, rng):
        """``(label, setup, exact)`` for every transform that applies to s"""
        a, b = s.a, s.b
        cases = [('rename A', rename_own(a, 'r'), b),
                 ('rename B', a, rename_own(b, 's')),
                 ('permute A', permute_own(a, rng), b),
                 ('permute B', a, permute_own(b, rng))]
        if a.own_relations():
            cases.append(('redundant A', add_redundant(a), b))
        if b.own_relations():
            cases.append(('redundant B', a, add_redundant(b)))
        for label, left, right in cases:
            yield label, TensorSetup(left, right, s.seed, s.name,
                                     s.prime_pairs), True
        if s.both_flat:
            yield 'swap', s.swapped(), False

    def test_corpus_transforms(self):
        rng = random.Random(7)
        count = 0
        for s in load_corpus(SAMPLE_DATA):
            baseline = run_suite(s)
            for label, changed, exact in self.transformed(s, rng):
                result = run_suite(changed)
                if exact:
                    self.assertEqual(outcome(result), outcome(baseline),
                                     f'{s.name} {label}')
                else:
                    self.assertEqual(changed.report_P.values(),
                                     s.report_P.values(), s.name)
                    self.assertEqual((changed.report_A, changed.report_B),
                                     (s.report_B, s.report_A), s.name)
                    self.assertEqual(top_level(result), top_level(baseline),
                                     f'{s.name} {label}')
                count += 1
        self.assertGreaterEqual(count, 200)


if __name__ == '__main__':
    main()
