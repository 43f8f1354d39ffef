import os
import random
from unittest import TestCase, main

from groebner.scalars import ModularField
from localalg.consts import GRADED, LOCAL
from localalg.exceptions import NotArtinian
from localalg.fileformat import load_presentation_file
from localalg.invariants import report
from localalg.oracle import build_model, commutation_check, embdim, \
    koszul_h1_dim, oracle_flatness, oracle_report, \
    random_artinian_presentation, socle_dim
from localalg.presentation import validate

SAMPLE_DATA = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir,
                           os.pardir, 'sample_data')


def sample(name):
    return load_presentation_file(os.path.join(SAMPLE_DATA, name)).algebras


class ArtinianModelTests(TestCase):
    """
    Tests the linear algebra model on small named algebras
    """

    def setUp(self):
        self.algebras = sample('field_q.alg')

    def test_square_of_the_maximal_ideal(self):
        model = build_model(validate(self.algebras['M']))
        self.assertEqual(model.dimension, 3)
        self.assertEqual(model.basis[0], (0, 0))
        self.assertTrue(commutation_check(model))
        self.assertEqual(socle_dim(model), 2)
        self.assertEqual(embdim(model), 2)
        self.assertEqual(koszul_h1_dim(model), 3)

    def test_report(self):
        result = oracle_report(build_model(validate(self.algebras['M'])))
        self.assertEqual((result.dim, result.embdim, result.mu, result.type),
                         (0, 2, 3, 2))
        self.assertEqual(result.cid, 1)

    def test_complete_intersection(self):
        model = build_model(validate(self.algebras['G']))
        self.assertEqual(socle_dim(model), 1)
        self.assertEqual(koszul_h1_dim(model), 2)

    def test_local_mode(self):
        for name in ('L1', 'L3'):
            a = validate(self.algebras[name])
            self.assertEqual(report(a).differences(
                oracle_report(build_model(a))), (), name)

    def test_positive_dimension(self):
        with self.assertRaises(NotArtinian) as raised:
            build_model(validate(self.algebras['X']))
        self.assertEqual(raised.exception.dim, 1)


class OracleFlatnessTests(TestCase):
    """
    Tests the freeness count over Artinian bases
    """

    def test_dual_numbers(self):
        t2 = sample('base_t2.alg')
        for name in ('A2', 'A3', 'B0'):
            self.assertTrue(oracle_flatness(t2[name]), name)
        self.assertFalse(oracle_flatness(t2['B1']))

    def test_square_of_the_maximal_ideal(self):
        m2 = sample('base_m2.alg')
        self.assertTrue(oracle_flatness(m2['A2']))
        self.assertTrue(oracle_flatness(m2['B0']))
        self.assertFalse(oracle_flatness(m2['B1']))

    def test_field_base(self):
        self.assertTrue(oracle_flatness(sample('field_q.alg')['M']))


class RandomArtinianTests(TestCase):
    """
    Tests that the Groebner pipeline and the linear algebra model agree on
    random Artinian algebras
    """

    def test_random_presentations(self):
        rng = random.Random(4093)
        modes = set()
        for index in range(100):
            field = 'Q' if index % 2 else 'Fp:32003'
            presentation = random_artinian_presentation(
                rng, field, name=f'random{index}')
            modes.add(presentation.mode)
            a = validate(presentation)
            model = build_model(a)
            self.assertTrue(commutation_check(model), presentation)
            self.assertEqual(report(a).differences(oracle_report(model)), (),
                             presentation)
            self.assertEqual(koszul_h1_dim(model), report(a).mu)
        self.assertEqual(modes, {GRADED, LOCAL})

    def test_field_is_kept(self):
        presentation = random_artinian_presentation(random.Random(1),
                                                    'Fp:7')
        self.assertEqual(presentation.field, ModularField(7))
        self.assertEqual(presentation.name, 'random')


if __name__ == '__main__':
    main()
