"""
The curated corpus of tensor setups shipped in ``sample_data/*.alg`` and the
battery that runs every check over it
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from functools import partial

from defects.consts import ALL, CORPUS_SUFFIX, DEFAULT_JOBS, SAMPLE_DATA
from defects.setup import TensorSetup
from defects.suite import run_suite
from defects.theorems import check_nontrivial
from localalg.consts import DEFAULT_SEED
from localalg.fileformat import load_presentation_file

logger = logging.getLogger(__name__)


def corpus_files(directory=SAMPLE_DATA):
    """Sorted paths of the corpus files in ``directory``"""
    names = sorted(f for f in os.listdir(directory) if f.endswith(CORPUS_SUFFIX))
    return [os.path.join(directory, f) for f in names
            if os.path.isfile(os.path.join(directory, f))]


def _stem(path):
    return os.path.splitext(os.path.basename(path))[0]


def _witness_primes(contents, a, b):
    """Generator lists of the declared prime pairs for ``(a, b)``"""
    pairs = contents.witness_pairs(a, b)
    if not pairs:
        return None
    return [(contents.prime(p)[1], contents.prime(q)[1]) for p, q in pairs]


def load_setups(path, seed=DEFAULT_SEED, field=None):
    """
    Tensor setups named by the ``pair`` lines of one presentation file
    :param path: ``.alg`` file
    :param seed: seed of the setups
    :param field: optional field override
    :return: list of ``TensorSetup``
    """
    contents = load_presentation_file(path, field)
    setups = []
    for a, b in contents.pairs:
        name = f'{_stem(path)}:{a}-{b}'
        setup = TensorSetup(contents.algebras[a], contents.algebras[b], seed,
                            name, _witness_primes(contents, a, b))
        logger.info(f'Registered setup {name} (flat {setup.flat_side})')
        setups.append(setup)
    return setups


def load_witness_cases(path, field=None):
    """
    ``(a, b, prime pairs)`` for every ``witness`` line group of a file whose
    algebras are not paired as setups (affine presentations)
    """
    contents = load_presentation_file(path, field)
    paired = set(contents.pairs)
    cases = []
    for a, b in contents.witnesses:
        if (a, b) in paired:
            continue
        cases.append((contents.algebras[a], contents.algebras[b],
                      _witness_primes(contents, a, b)))
    return cases


def load_corpus(directory=SAMPLE_DATA, seed=DEFAULT_SEED, field=None):
    """Every setup of every corpus file in ``directory``"""
    setups = []
    for path in corpus_files(directory):
        setups.extend(load_setups(path, seed, field))
    logger.info(f'Loaded {len(setups)} setups from {directory}')
    return setups


class BatteryFailure:
    """A failing check (or an error) met while running the battery"""

    def __init__(self, source, detail):
        self.source = source
        self.detail = detail

    def __str__(self):
        return f'{self.source} : {self.detail}'


def _setup_failures(setup, bundle_dir=None):
    try:
        suite = run_suite(setup, ALL, bundle_dir)
    except Exception as e:
        return [BatteryFailure(setup.name, e)]
    return [BatteryFailure(setup.name, r.line()) for r in suite.failures()]


def battery(paths, seed=DEFAULT_SEED, bundle_dir=None, field=None,
            jobs=DEFAULT_JOBS):
    """
    Runs every check on every setup and witness case of the given files.
    Errors are collected as failures instead of stopping the run. The setups
    of a file are spread over ``jobs`` worker threads; failures are reported
    in file and setup order whatever the number of workers
    :param paths: ``.alg`` files
    :param jobs: number of worker threads
    :return: list of ``BatteryFailure``
    """
    failures = []
    for path in paths:
        try:
            setups = load_setups(path, seed, field)
            cases = load_witness_cases(path, field)
        except Exception as e:
            failures.append(BatteryFailure(path, e))
            continue
        with ThreadPoolExecutor(max_workers=max(jobs, 1)) as executor:
            for found in executor.map(partial(_setup_failures,
                                              bundle_dir=bundle_dir), setups):
                failures.extend(found)
        for a, b, pairs in cases:
            source = f'{_stem(path)}:{a.name}-{b.name}'
            try:
                result = check_nontrivial(a, b, pairs)
            except Exception as e:
                failures.append(BatteryFailure(source, e))
                continue
            if not result.passed:
                failures.append(BatteryFailure(source, result.line()))
    return failures
