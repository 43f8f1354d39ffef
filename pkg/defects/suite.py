"""
Runs the theorem checks of a tensor setup in a fixed order and writes a
reproduction bundle when a check fails
"""
import json
import logging
import os

from defects.consts import ALL, BUNDLE_NAME, CODIM, EMBDIM, NONTRIVIAL, \
    THEOREMS, TYPE
from defects.exceptions import CertificateMissing, DivisibilityViolation, \
    UnknownTheorem
from defects.theorems import SETUP_CHECKS, TheoremCheckResult, \
    check_nontrivial
from localalg.fileformat import presentation_to_text

logger = logging.getLogger(__name__)


def select_theorems(theorems=ALL):
    """
    Theorem names to run, in suite order
    :param theorems: a name, an iterable of names, or ``all``
    :raises UnknownTheorem: for a name outside ``THEOREMS``
    """
    if isinstance(theorems, str):
        theorems = [theorems]
    theorems = list(theorems)
    for name in theorems:
        if name != ALL and name not in THEOREMS:
            raise UnknownTheorem(name)
    if ALL in theorems:
        return THEOREMS
    return tuple(name for name in THEOREMS if name in theorems)


class SuiteResult:
    """Results of one suite run over one setup, in suite order"""

    def __init__(self, setup, results, bundle=None):
        self.setup = setup
        self.results = tuple(results)
        self.bundle = bundle

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def flatten(self):
        return [line for r in self.results for line in r.flatten()]

    def failures(self):
        return [r for r in self.flatten() if not r.passed]

    def lines(self):
        return [r.line() for r in self.flatten()]

    def to_json(self):
        return [r.to_json() for r in self.results]


def _run_one(setup, name, explicit):
    if name == NONTRIVIAL:
        return [check_nontrivial(setup.a, setup.b, setup.prime_pairs)]
    check = SETUP_CHECKS[name]
    try:
        outcome = check(setup)
    except CertificateMissing:
        if explicit or name not in (CODIM, EMBDIM):
            raise
        logger.info(f'Skipping {name} on {setup.name}: no smoothness ' +
                    'certificate')
        return []
    except DivisibilityViolation as e:
        logger.warning(str(e))
        return [TheoremCheckResult(TYPE, setup.report_P.type,
                                   f'{e.numerator}/{e.denominator}',
                                   setup.operands(), passed=False)]
    return outcome if isinstance(outcome, list) else [outcome]


def run_suite(setup, theorems=ALL, bundle_dir=None):
    """
    Runs the selected checks on ``setup``.

    ``codim`` and ``embdim`` are skipped when they are only implied by
    ``all`` and the setup has no smoothness certificate
    :param setup: ``TensorSetup``
    :param theorems: theorem name(s) or ``all``
    :param bundle_dir: directory for the failure bundle; None writes nothing
    :return: ``SuiteResult``
    """
    selected = select_theorems(theorems)
    explicit = ALL not in ([theorems] if isinstance(theorems, str)
                           else list(theorems))
    results = []
    for name in selected:
        for result in _run_one(setup, name, explicit):
            verdict = 'passed' if result.ok else 'FAILED'
            logger.info(f'{setup.name}: {result.theorem} {verdict}')
            results.append(result)
    suite = SuiteResult(setup, results)
    if not suite.ok and bundle_dir is not None:
        suite.bundle = write_bundle(setup, suite, bundle_dir)
    return suite


def bundle_data(setup, suite):
    """JSON-ready reproduction data: presentations, seed and results"""
    return {'setup': setup.name,
            'seed': setup.seed,
            'presentations': presentation_to_text(setup.a, setup.b),
            'results': suite.to_json()}


def write_bundle(setup, suite, directory):
    """Writes the reproduction bundle of a failed run; returns its path"""
    os.makedirs(directory, exist_ok=True)
    name = BUNDLE_NAME.format(setup=setup.name.replace(os.sep, '_'),
                              seed=setup.seed)
    path = os.path.join(directory, name)
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(bundle_data(setup, suite), handle, indent=2)
    logger.warning(f'Wrote reproduction bundle {path}')
    return path
