import json
import os
from tempfile import TemporaryDirectory
from unittest import TestCase, main
from unittest.mock import MagicMock, patch

from defects.consts import ALL, THEOREMS, TYPE
from defects.exceptions import CertificateMissing, DivisibilityViolation, \
    UnknownTheorem
from defects.setup import TensorSetup
from defects.suite import bundle_data, run_suite, select_theorems
from defects.theorems import SETUP_CHECKS
from localalg.fileformat import load_presentation_file

SAMPLE_DATA = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir,
                           os.pardir, 'sample_data')


def setup(name, a, b):
    algebras = load_presentation_file(os.path.join(SAMPLE_DATA,
                                                   name)).algebras
    return TensorSetup(algebras[a], algebras[b])


class SelectTheoremsTests(TestCase):

    def test_all(self):
        self.assertEqual(select_theorems(), THEOREMS)
        self.assertEqual(select_theorems([ALL, 'cid']), THEOREMS)

    def test_suite_order(self):
        self.assertEqual(select_theorems(['cid', 'dim']), ('dim', 'cid'))
        self.assertEqual(select_theorems('type'), ('type',))

    def test_unknown(self):
        with self.assertRaises(UnknownTheorem):
            select_theorems(['dim', 'bogus'])


class RunSuiteTests(TestCase):
    """
    Tests running the checks of a setup in suite order
    """

    def test_field_setup_passes(self):
        suite = run_suite(setup('field_q.alg', 'M', 'M'))
        self.assertTrue(suite.ok)
        self.assertEqual(suite.failures(), [])
        self.assertIsNone(suite.bundle)
        theorems = [r.theorem for r in suite.results]
        self.assertEqual(theorems[:5],
                         ['dim', 'depth', 'codepth', 'idd', 'type'])
        self.assertIn('codim', theorems)
        self.assertEqual(theorems[-1], 'nontrivial')

    def test_single_theorem(self):
        suite = run_suite(setup('field_q.alg', 'M', 'M'), 'cid')
        self.assertEqual(suite.lines()[0], 'cid: lhs 2 rhs 2 PASS')
        self.assertEqual(len(suite.results), 1)
        self.assertEqual(len(suite.flatten()), 7)

    def test_smooth_checks_skipped_without_certificate(self):
        suite = run_suite(setup('base_t2.alg', 'A2', 'B1'))
        theorems = [r.theorem for r in suite.results]
        self.assertNotIn('codim', theorems)
        self.assertNotIn('embdim', theorems)
        self.assertIn('epsilon2', theorems)
        self.assertTrue(suite.ok)

    def test_explicit_smooth_check_raises(self):
        with self.assertRaises(CertificateMissing):
            run_suite(setup('base_t2.alg', 'A2', 'B1'), ['codim'])

    def test_json(self):
        data = run_suite(setup('field_q.alg', 'X', 'Y'), ['dim', 'idd'])\
            .to_json()
        self.assertEqual([d['theorem'] for d in data], ['dim', 'idd'])
        self.assertTrue(all(d['pass'] for d in data))
        json.dumps(data)


class FailureBundleTests(TestCase):
    """
    Tests that failed runs leave a reproduction bundle behind
    """

    def test_divisibility_violation_fails_type(self):
        s = setup('field_q.alg', 'M', 'M')
        violation = MagicMock(side_effect=DivisibilityViolation(s.name, 3, 2))
        with patch.dict(SETUP_CHECKS, {TYPE: violation}), \
                TemporaryDirectory() as directory:
            suite = run_suite(s, [TYPE], bundle_dir=directory)
            self.assertFalse(suite.ok)
            failure = suite.failures()[0]
            self.assertEqual((failure.theorem, failure.rhs), ('type', '3/2'))
            self.assertEqual(suite.bundle, os.path.join(
                directory, f'bundle-M-M-{s.seed}.json'))
            with open(suite.bundle, encoding='utf-8') as handle:
                data = json.load(handle)
        violation.assert_called_once_with(s)
        self.assertEqual((data['setup'], data['seed']), ('M-M', s.seed))
        self.assertIn('algebra M', data['presentations'])
        self.assertFalse(data['results'][0]['pass'])

    def test_passing_run_writes_nothing(self):
        with TemporaryDirectory() as directory:
            suite = run_suite(setup('field_q.alg', 'X', 'Y'), ['dim'],
                              bundle_dir=directory)
            self.assertIsNone(suite.bundle)
            self.assertEqual(os.listdir(directory), [])

    def test_bundle_data(self):
        s = setup('base_t2.alg', 'A2', 'B1')
        data = bundle_data(s, run_suite(s, ['dim']))
        self.assertIn('base R', data['presentations'])
        self.assertEqual(data['results'][0]['theorem'], 'dim')


if __name__ == '__main__':
    main()
