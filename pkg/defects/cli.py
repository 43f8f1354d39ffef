"""
Command line front end.

    python -m defects invariants FILE NAME
    python -m defects check FILE A B [--theorem cid ...]
    python -m defects oracle FILE NAME
    python -m defects tensor FILE A B
    python -m defects battery FILE... [--jobs N]

Common flags: ``--json``, ``--seed N``, ``--field Q|Fp:p``, ``--verbose``
and ``--bundle-dir DIR``.
"""
import argparse
import json
import logging
import sys

from defects.consts import ALL, DEFAULT_JOBS, EXIT_CERTIFICATE, \
    EXIT_FAILED_CHECKS, EXIT_OK, EXIT_PARSE, EXIT_REGIME, EXIT_VALIDATION, \
    LOGGED_PACKAGES, NONTRIVIAL, THEOREMS
from defects.corpus import battery
from defects.exceptions import CertificateMissing, UnknownAlgebra, \
    UnknownTheorem
from defects.setup import TensorSetup
from defects.suite import run_suite
from defects.theorems import check_nontrivial, render_value
from groebner.exceptions import FieldError, PolynomialParseError
from localalg.consts import DEFAULT_SEED, REPORT_FIELDS
from localalg.exceptions import AffineModeRefused, NotArtinian, \
    PresentationError, PresentationFileError
from localalg.fileformat import load_presentation_file, presentation_to_text
from localalg.invariants import report
from localalg.oracle import build_model, oracle_report
from localalg.presentation import validate
from localalg.tensor import tensor_product

logger = logging.getLogger(__name__)

COMMANDS = ('invariants', 'check', 'oracle', 'tensor', 'battery')


class RunConfig:
    """
    Settings of one command line run

    :param command: one of ``COMMANDS``
    :param paths: input files (one, except for ``battery``)
    :param algebras: selected algebra names
    :param theorems: theorem filter for ``check``
    :param seed: seed of the randomized invariant computations
    :param output: ``text`` or ``json``
    :param field: optional field override of the input files
    :param verbosity: 0 (warnings), 1 (info) or 2 (debug)
    :param bundle_dir: directory for failure bundles, or None
    :param jobs: worker threads of ``battery``
    """

    def __init__(self, command, paths, algebras=(), theorems=(ALL,),
                 seed=DEFAULT_SEED, output='text', field=None, verbosity=0,
                 bundle_dir=None, jobs=DEFAULT_JOBS):
        self.command = command
        self.paths = tuple(paths)
        self.algebras = tuple(algebras)
        self.theorems = tuple(theorems)
        self.seed = seed
        self.output = output
        self.field = field
        self.verbosity = verbosity
        self.bundle_dir = bundle_dir
        self.jobs = jobs

    @property
    def path(self):
        return self.paths[0]

    @property
    def json(self):
        return self.output == 'json'

    @property
    def log_level(self):
        return (logging.WARNING, logging.INFO,
                logging.DEBUG)[min(self.verbosity, 2)]

    @classmethod
    def from_args(cls, args):
        algebras = [getattr(args, n) for n in ('name', 'a', 'b')
                    if getattr(args, n, None) is not None]
        paths = args.files if args.command == 'battery' else [args.file]
        return cls(args.command, paths, algebras,
                   getattr(args, 'theorem', None) or (ALL,), args.seed,
                   'json' if args.json else 'text', args.field, args.verbose,
                   args.bundle_dir, getattr(args, 'jobs', DEFAULT_JOBS))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='print JSON instead of text')
    common.add_argument('--seed', type=int, default=DEFAULT_SEED,
                        help='seed of the random linear forms')
    common.add_argument('--field', default=None,
                        help='override the field of the input: Q or Fp:p')
    common.add_argument('--verbose', '-v', action='count', default=0,
                        help='log more (repeat for debug output)')
    common.add_argument('--bundle-dir', default=None,
                        help='write reproduction bundles of failed checks')
    parser = argparse.ArgumentParser(
        prog='defects',
        description='Invariants of local algebras and transfer checks for ' +
                    'their tensor products')
    commands = parser.add_subparsers(dest='command', required=True)
    single = commands.add_parser('invariants', parents=[common],
                                 help='report the invariants of an algebra')
    single.add_argument('file')
    single.add_argument('name')
    check = commands.add_parser('check', parents=[common],
                                help='check the transfer identities for A, B')
    check.add_argument('file')
    check.add_argument('a')
    check.add_argument('b')
    check.add_argument('--theorem', action='append',
                       choices=(ALL,) + THEOREMS,
                       help='theorem to check (repeatable, default all)')
    oracle = commands.add_parser('oracle', parents=[common],
                                 help='compare with the linear algebra model')
    oracle.add_argument('file')
    oracle.add_argument('name')
    tensor = commands.add_parser('tensor', parents=[common],
                                 help='print the presentation of A (x) B')
    tensor.add_argument('file')
    tensor.add_argument('a')
    tensor.add_argument('b')
    run = commands.add_parser('battery', parents=[common],
                              help='check every setup of corpus files')
    run.add_argument('files', nargs='+')
    run.add_argument('--jobs', '-j', type=int, default=DEFAULT_JOBS,
                     help='check the setups of a file on this many threads')
    return parser


def _algebra(contents, name):
    if name not in contents:
        raise UnknownAlgebra(name, tuple(contents.algebras))
    return contents.algebras[name]


def render_report(result):
    lines = [result.name]
    for field, value in result.values().items():
        lines.append(f'  {field:<12}{render_value(value)}')
    lines.append(f'  {"flat":<12}{result.flat_certificate}')
    return '\n'.join(lines)


def cmd_invariants(config, out):
    contents = load_presentation_file(config.path, config.field)
    a = validate(_algebra(contents, config.algebras[0]))
    result = report(a, config.seed)
    if config.json:
        print(json.dumps(result.to_json(), indent=2), file=out)
    else:
        print(render_report(result), file=out)
    return EXIT_OK


def _print_results(config, results, out):
    if config.json:
        print(json.dumps([r.to_json() for r in results], indent=2), file=out)
    else:
        print('\n'.join(r.line() for r in results), file=out)


def cmd_check(config, out):
    contents = load_presentation_file(config.path, config.field)
    a_name, b_name = config.algebras
    a, b = _algebra(contents, a_name), _algebra(contents, b_name)
    pairs = contents.witness_pairs(a_name, b_name)
    prime_pairs = [(contents.prime(p)[1], contents.prime(q)[1])
                   for p, q in pairs] or None
    if set(config.theorems) == {NONTRIVIAL}:
        # needs no setup: affine factors and factors without a flatness
        # certificate are allowed
        result = check_nontrivial(a, b, prime_pairs)
        _print_results(config, [result], out)
        return EXIT_OK if result.ok else EXIT_FAILED_CHECKS
    setup = TensorSetup(a, b, config.seed, f'{a_name}-{b_name}', prime_pairs)
    suite = run_suite(setup, config.theorems, config.bundle_dir)
    if config.json:
        print(json.dumps(suite.to_json(), indent=2), file=out)
    else:
        print('\n'.join(suite.lines()), file=out)
    return EXIT_OK if suite.ok else EXIT_FAILED_CHECKS


def cmd_oracle(config, out):
    contents = load_presentation_file(config.path, config.field)
    a = validate(_algebra(contents, config.algebras[0]))
    model = build_model(a)
    pipeline = report(a, config.seed)
    expected = oracle_report(model)
    mismatches = pipeline.differences(expected)
    if config.json:
        data = {'algebra': a.name, 'pipeline': pipeline.to_json(),
                'oracle': expected.to_json(),
                'mismatches': list(mismatches)}
        print(json.dumps(data, indent=2), file=out)
    else:
        print(f'{a.name} (dimension {model.dimension} over the field)',
              file=out)
        print(f'  {"field":<12}{"pipeline":<10}oracle', file=out)
        mine, theirs = pipeline.values(), expected.values()
        for field in REPORT_FIELDS:
            mark = '' if field not in mismatches else '  MISMATCH'
            print(f'  {field:<12}{render_value(mine[field]):<10}' +
                  f'{render_value(theirs[field])}{mark}', file=out)
    return EXIT_OK if not mismatches else EXIT_FAILED_CHECKS


def cmd_tensor(config, out):
    contents = load_presentation_file(config.path, config.field)
    a, b = (_algebra(contents, n) for n in config.algebras)
    product = tensor_product(a, b)
    result = report(validate(product), config.seed)
    if config.json:
        data = {'presentation': presentation_to_text(product),
                'report': result.to_json()}
        print(json.dumps(data, indent=2), file=out)
    else:
        print(presentation_to_text(product), file=out)
        print(render_report(result), file=out)
    return EXIT_OK


def cmd_battery(config, out):
    failures = battery(config.paths, config.seed, config.bundle_dir,
                       config.field, config.jobs)
    if config.json:
        print(json.dumps([{'source': f.source, 'detail': str(f.detail)}
                          for f in failures], indent=2), file=out)
    else:
        for failure in failures:
            print(failure, file=out)
        print(f'\nGot {len(failures)} failures during checking', file=out)
    return EXIT_OK if not failures else EXIT_FAILED_CHECKS


HANDLERS = {
    'invariants': cmd_invariants,
    'check': cmd_check,
    'oracle': cmd_oracle,
    'tensor': cmd_tensor,
    'battery': cmd_battery,
}


def exit_code(error):
    """Exit code of the command line for an exception"""
    if isinstance(error, (PresentationFileError, PolynomialParseError,
                          FieldError, UnknownTheorem, OSError)):
        return EXIT_PARSE
    if isinstance(error, (NotArtinian, AffineModeRefused)):
        return EXIT_REGIME
    if isinstance(error, CertificateMissing):
        return EXIT_CERTIFICATE
    if isinstance(error, (PresentationError, UnknownAlgebra)):
        return EXIT_VALIDATION
    return None


def main(argv=None, out=None):
    """
    Runs one command
    :param argv: arguments without the program name; ``sys.argv`` by default
    :param out: output stream; stdout by default
    :return: process exit code
    """
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    config = RunConfig.from_args(args)
    logging.basicConfig(level=config.log_level)
    for package in LOGGED_PACKAGES:
        logging.getLogger(package).setLevel(config.log_level)
    try:
        return HANDLERS[config.command](config, out)
    except Exception as e:
        code = exit_code(e)
        if code is None:
            raise
        logger.error(f'{config.command}: {e}')
        return code
