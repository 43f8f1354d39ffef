"""
Reader and writer for presentation files (``.alg``).

    # comment
    field Q                      (or: field Fp 32003)
    base R { vars t; relations t^2 }
    algebra A over R { mode graded; vars x, y; relations x^2, x*y }
    algebra B { mode local; vars u; relations u^3; certificate user }
    prime P of A { t, x }
    pair A B
    witness A B with P Q

Blocks may span several lines; body items are separated by ``;`` or line
breaks. An algebra without ``over`` (or with ``over field``) is defined over
the prime field. ``pair`` lines name the tensor setups of the file and
``witness`` lines attach candidate prime pairs to a setup.
"""
import logging
import re

from groebner import prime_field
from groebner.exceptions import FieldError, PolynomialParseError
from localalg.consts import GRADED
from localalg.exceptions import PresentationError, PresentationFileError
from localalg.presentation import AlgebraPresentation, BaseAlgebra, \
    FieldBase

logger = logging.getLogger(__name__)

FIELD_LINE = re.compile(r'^field\s+(.+)$')
BASE_BLOCK = re.compile(r'^base\s+(\w+)\s*\{(.*)\}$', re.S)
ALGEBRA_BLOCK = re.compile(r'^algebra\s+(\w+)(?:\s+over\s+(\w+))?\s*\{(.*)\}$',
                           re.S)
PRIME_BLOCK = re.compile(r'^prime\s+(\w+)\s+of\s+(\w+)\s*\{(.*)\}$', re.S)
PAIR_LINE = re.compile(r'^pair\s+(\w+)\s+(\w+)$')
WITNESS_LINE = re.compile(r'^witness\s+(\w+)\s+(\w+)\s+with\s+(\w+)\s+(\w+)$')


class PresentationFile:
    """
    Contents of a presentation file: the field, named bases, named algebras
    (in file order), user-asserted primes, tensor pairs and prime witnesses
    """

    def __init__(self, field, bases=None, algebras=None, primes=None,
                 pairs=(), witnesses=None):
        self.field = field
        self.bases = dict(bases or {})
        self.algebras = dict(algebras or {})
        self.primes = dict(primes or {})
        self.pairs = list(pairs)
        self.witnesses = dict(witnesses or {})

    def __contains__(self, name):
        return name in self.algebras

    def prime(self, name):
        """``(algebra name, generator texts)`` of a declared prime"""
        return self.primes[name]

    def witness_pairs(self, a, b):
        return list(self.witnesses.get((a, b), ()))

    def to_text(self):
        lines = [f'field {field_text(self.field)}']
        for name, base in self.bases.items():
            lines.append(block_text('base', base.presentation))
        for presentation in self.algebras.values():
            lines.append(block_text('algebra', presentation))
        for name, (algebra, generators) in self.primes.items():
            lines.append(f'prime {name} of {algebra} {{ ' +
                         ', '.join(generators) + ' }')
        for a, b in self.pairs:
            lines.append(f'pair {a} {b}')
        for (a, b), candidates in self.witnesses.items():
            for p, q in candidates:
                lines.append(f'witness {a} {b} with {p} {q}')
        return '\n'.join(lines) + '\n'


def field_text(field):
    if field.characteristic == 0:
        return 'Q'
    return f'Fp {field.characteristic}'


def block_text(keyword, presentation):
    """One ``base``/``algebra`` block for ``presentation``"""
    items = [f'mode {presentation.mode}']
    if presentation.variables:
        items.append('vars ' + ', '.join(presentation.variables))
    relations = presentation.own_relations()
    if relations:
        items.append('relations ' + ', '.join(str(r) for r in relations))
    if presentation.user_flat:
        items.append('certificate user')
    head = f'{keyword} {presentation.name}'
    if keyword == 'algebra' and not presentation.base.is_field:
        head += f' over {presentation.base.name}'
    return head + ' { ' + '; '.join(items) + ' }'


def presentation_to_text(*presentations):
    """
    Self-contained file text for the given presentations: the field line,
    the bases they use, then one block per presentation
    """
    if not presentations:
        return ''
    lines = [f'field {field_text(presentations[0].field)}']
    seen = []
    for presentation in presentations:
        base = presentation.base
        if not base.is_field and base not in seen:
            seen.append(base)
            lines.append(block_text('base', base.presentation))
    for presentation in presentations:
        lines.append(block_text('algebra', presentation))
    return '\n'.join(lines) + '\n'


def _statements(text):
    """
    Yields ``(line number, statement)`` with comments removed and multi-line
    blocks joined
    """
    pending, start, depth = [], 0, 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            if depth:
                pending.append('')
            continue
        if not depth:
            start = number
        pending.append(line)
        depth += line.count('{') - line.count('}')
        if depth < 0:
            raise PresentationFileError(number, 'unbalanced "}"')
        if not depth:
            yield start, '\n'.join(pending)
            pending = []
    if depth:
        raise PresentationFileError(start, 'block is never closed')


def _body_items(body):
    body = re.sub(r',\s*\n', ', ', body)
    return [item.strip() for item in re.split(r'[;\n]', body)
            if item.strip()]


def _split_list(text):
    return [part.strip() for part in text.split(',') if part.strip()]


def _read_body(number, body, default_mode=GRADED):
    spec = {'mode': default_mode, 'vars': [], 'relations': [],
            'user_flat': False}
    for item in _body_items(body):
        keyword, _, rest = item.partition(' ')
        rest = rest.strip()
        if keyword == 'mode':
            spec['mode'] = rest
        elif keyword == 'vars':
            spec['vars'] = [v for part in _split_list(rest)
                            for v in part.split()]
        elif keyword == 'relations':
            spec['relations'] = _split_list(rest)
        elif keyword == 'certificate':
            if rest != 'user':
                raise PresentationFileError(number,
                                            f'unknown certificate "{rest}"')
            spec['user_flat'] = True
        else:
            raise PresentationFileError(number, f'unknown item "{item}"')
    return spec


def _build(number, name, base, spec):
    try:
        return AlgebraPresentation(name, base, spec['vars'],
                                   spec['relations'], spec['mode'],
                                   spec['user_flat'])
    except (PolynomialParseError, PresentationError, ValueError) as e:
        raise PresentationFileError(number, str(e)) from e


def parse_presentation_file(text, field=None):
    """
    Parses presentation file text
    :param text: file contents
    :param field: optional field overriding the file's ``field`` line
    :return: ``PresentationFile``
    """
    override = prime_field(field) if field is not None else None
    result = PresentationFile(override or prime_field('Q'))
    declared_field = False
    for number, statement in _statements(text):
        match = FIELD_LINE.match(statement)
        if match:
            if declared_field or result.bases or result.algebras:
                raise PresentationFileError(number, 'field must come first ' +
                                            'and only once')
            declared_field = True
            if override is None:
                try:
                    result.field = prime_field(match.group(1))
                except FieldError as e:
                    raise PresentationFileError(number, str(e)) from e
            continue
        match = BASE_BLOCK.match(statement)
        if match:
            name, body = match.groups()
            spec = _read_body(number, body)
            presentation = _build(number, name, FieldBase(result.field), spec)
            try:
                result.bases[name] = BaseAlgebra(presentation)
            except PresentationError as e:
                raise PresentationFileError(number, str(e)) from e
            continue
        match = ALGEBRA_BLOCK.match(statement)
        if match:
            name, over, body = match.groups()
            if name in result.algebras:
                raise PresentationFileError(number,
                                            f'algebra {name} defined twice')
            if over is None or over == 'field':
                base = FieldBase(result.field)
            elif over in result.bases:
                base = result.bases[over]
            else:
                raise PresentationFileError(number, f'unknown base "{over}"')
            result.algebras[name] = _build(number, name, base,
                                           _read_body(number, body))
            continue
        match = PRIME_BLOCK.match(statement)
        if match:
            name, algebra, body = match.groups()
            if algebra not in result.algebras:
                raise PresentationFileError(number,
                                            f'unknown algebra "{algebra}"')
            generators = tuple(g for item in _body_items(body)
                               for g in _split_list(item))
            ring = result.algebras[algebra].ring
            for g in generators:
                try:
                    ring.parse(g)
                except PolynomialParseError as e:
                    raise PresentationFileError(number, str(e)) from e
            result.primes[name] = (algebra, generators)
            continue
        match = PAIR_LINE.match(statement)
        if match:
            for name in match.groups():
                if name not in result.algebras:
                    raise PresentationFileError(number,
                                                f'unknown algebra "{name}"')
            result.pairs.append(match.groups())
            continue
        match = WITNESS_LINE.match(statement)
        if match:
            a, b, p, q = match.groups()
            for prime in (p, q):
                if prime not in result.primes:
                    raise PresentationFileError(number,
                                                f'unknown prime "{prime}"')
            result.witnesses.setdefault((a, b), []).append((p, q))
            continue
        raise PresentationFileError(number, 'cannot read ' +
                                    f'"{statement.splitlines()[0]}"')
    logger.debug(f'Read {len(result.algebras)} algebras and ' +
                 f'{len(result.pairs)} pairs')
    return result


def load_presentation_file(path, field=None):
    with open(path, encoding='utf-8') as handle:
        return parse_presentation_file(handle.read(), field)
