"""
Presentations of algebras over a base, their validation into local
algebras at the irrelevant ideal, and minimalization.

An algebra ``A`` over a base ``R = k[t]/I_R`` is presented on the variables
``t`` of the base followed by its own variables ``x``; its relation ideal
always contains the base relations, so the base embeds by variable
inclusion.
"""
import logging
from functools import cached_property

from groebner import Ideal, PolynomialRing, prime_field, trim
from groebner.ideal import eliminate, ideal_product, maximal_ideal
from groebner.linalg import independent_rows
from groebner.modules import FreeSubmodule
from localalg.consts import AFFINE, GRADED, MODES
from localalg.exceptions import AffineModeRefused, BaseResidueNotPrimeField, \
    NonHomogeneousRelation, PresentationError, VariableNameClash, \
    VariableNotNilpotent

logger = logging.getLogger(__name__)


class FieldBase:
    """The prime field ``k`` as a base ring"""
    is_field = True
    variables = ()
    relations = ()
    name = 'field'

    def __init__(self, field=None):
        self.field = prime_field(field)

    @property
    def ring(self):
        return PolynomialRing(self.field, ())

    def __eq__(self, other):
        return isinstance(other, FieldBase) and self.field == other.field

    def __hash__(self):
        return hash(('FieldBase', self.field))

    def __repr__(self):
        return repr(self.field)


class BaseAlgebra:
    """
    A base ring ``k[t]/I_R`` given by a presentation over its prime field in
    graded or local mode
    """
    is_field = False

    def __init__(self, presentation):
        if not presentation.base.is_field:
            raise PresentationError(f'Base {presentation.name} must be ' +
                                    'presented over a prime field')
        if presentation.mode == AFFINE:
            raise AffineModeRefused(presentation.name)
        self.presentation = presentation

    @property
    def name(self):
        return self.presentation.name

    @property
    def field(self):
        return self.presentation.field

    @property
    def variables(self):
        return self.presentation.variables

    @property
    def relations(self):
        return self.presentation.relations

    @property
    def ring(self):
        return self.presentation.ring

    def __eq__(self, other):
        return isinstance(other, BaseAlgebra) and \
            self.presentation == other.presentation

    def __hash__(self):
        return hash(('BaseAlgebra', self.presentation))

    def __repr__(self):
        return self.presentation.name


class AlgebraPresentation:
    """
    ``name = k[base vars, vars] / relations`` in one of the modes ``graded``,
    ``local`` or ``affine``.

    :param name: identifier of the algebra
    :param base: ``FieldBase`` or ``BaseAlgebra``
    :param variables: own variable names, disjoint from the base variables
    :param relations: polynomials of ``self.ring`` (or strings in the
        polynomial grammar); the base relations are added automatically
    :param mode: ``graded``, ``local`` or ``affine``
    :param user_flat: the presentation asserts flatness over its base
    """

    def __init__(self, name, base, variables, relations=(), mode=GRADED,
                 user_flat=False):
        if mode not in MODES:
            raise PresentationError(f'Unknown mode "{mode}" for {name}')
        self.name = name
        self.base = base
        self.variables = tuple(variables)
        clash = sorted(set(self.variables) & set(base.variables))
        if clash:
            raise VariableNameClash(name, clash)
        self.mode = mode
        self.user_flat = user_flat
        self.ring = PolynomialRing(base.field, base.variables + self.variables)
        inherited = [r.to_ring(self.ring) for r in base.relations]
        own = [self.ring.parse(r) if isinstance(r, str) else r.to_ring(self.ring)
               for r in relations]
        unique = []
        for r in inherited + own:
            if r and r not in unique:
                unique.append(r)
        self.relations = tuple(unique)

    @property
    def field(self):
        return self.ring.field

    @property
    def all_variables(self):
        return self.ring.variables

    @property
    def ideal(self):
        return Ideal(self.ring, self.relations)

    def own_relations(self):
        """Relations that are not inherited from the base"""
        inherited = {r.to_ring(self.ring) for r in self.base.relations}
        return tuple(r for r in self.relations if r not in inherited)

    def with_relations(self, relations, name=None, mode=None):
        return AlgebraPresentation(name or self.name, self.base,
                                   self.variables, relations,
                                   mode or self.mode, self.user_flat)

    def renamed(self, mapping, name=None):
        """Renames own variables through ``mapping`` (old -> new)"""
        variables = tuple(mapping.get(v, v) for v in self.variables)
        target = PolynomialRing(self.field, self.base.variables + variables)
        relations = [r.rename(mapping, target) for r in self.own_relations()]
        return AlgebraPresentation(name or self.name, self.base, variables,
                                   relations, self.mode, self.user_flat)

    def __eq__(self, other):
        return isinstance(other, AlgebraPresentation) and \
            (self.name, self.base, self.variables, self.relations,
             self.mode) == (other.name, other.base, other.variables,
                            other.relations, other.mode)

    def __hash__(self):
        return hash((self.name, self.base, self.variables, self.relations,
                     self.mode))

    def __repr__(self):
        return f'{self.name} = {self.ring!r}/{self.ideal!r} [{self.mode}]'


class LocalAlgebra:
    """
    A validated graded or local presentation, viewed at its irrelevant
    maximal ideal (generated by all variables). Derived data is computed
    lazily and kept on the instance
    """

    def __init__(self, presentation):
        self.presentation = presentation

    @property
    def name(self):
        return self.presentation.name

    @property
    def mode(self):
        return self.presentation.mode

    @property
    def ring(self):
        return self.presentation.ring

    @property
    def field(self):
        return self.presentation.field

    @property
    def ideal(self):
        return self.presentation.ideal

    @property
    def base(self):
        return self.presentation.base

    @cached_property
    def groebner_basis(self):
        return self.ideal.groebner_basis()

    @cached_property
    def minimal(self):
        """The minimalized presentation, validated"""
        return LocalAlgebra(minimalize(self.presentation))

    def __eq__(self, other):
        return isinstance(other, LocalAlgebra) and \
            self.presentation == other.presentation

    def __hash__(self):
        return hash(self.presentation)

    def __repr__(self):
        return f'LocalAlgebra({self.presentation!r})'


def _check_residue(presentation):
    for r in presentation.relations:
        if r.constant_term():
            raise BaseResidueNotPrimeField(presentation.name, r)


def validate(presentation):
    """
    Checks the mode invariants and returns the local view at the irrelevant
    ideal
    :param presentation: ``AlgebraPresentation`` in graded or local mode
    :return: ``LocalAlgebra``
    """
    if presentation.mode == AFFINE:
        raise AffineModeRefused(presentation.name)
    if not presentation.base.is_field:
        validate(presentation.base.presentation)
    _check_residue(presentation)
    if presentation.mode == GRADED:
        for r in presentation.relations:
            if not r.is_homogeneous():
                raise NonHomogeneousRelation(presentation.name, r)
    else:
        _check_nilpotent(presentation)
    logger.debug(f'Validated {presentation.name} ({presentation.mode})')
    return LocalAlgebra(presentation)


def _check_nilpotent(presentation):
    ideal = presentation.ideal
    basis = ideal.groebner_basis()
    ring = presentation.ring
    leads = basis.leading_monomials()
    for i, v in enumerate(ring.variables):
        if not any(any(lead) and all(not e for j, e in enumerate(lead) if j != i)
                   for lead in leads):
            raise VariableNotNilpotent(presentation.name, v)
    bound = ideal.vector_space_dim()
    for v in ring.variables:
        if not basis.contains(ring.gen(v) ** (bound + 1)):
            raise VariableNotNilpotent(presentation.name, v)


def _pivot_variables(presentation):
    """
    Variables solved for along the linear parts of the relations. Columns are
    ordered so that variables occurring in few relations are preferred
    """
    ring = presentation.ring
    relations = presentation.relations
    counts = [sum(1 for r in relations if i in r.support())
              for i in range(ring.nvars)]
    columns = sorted(range(ring.nvars), key=lambda i: (counts[i], i))
    rows = []
    for r in relations:
        linear = r.linear_part()
        if linear:
            rows.append([linear.get(i, ring.field.zero) for i in columns])
    if not rows:
        return ()
    # pivots of the row space are the independent columns of the transpose
    transposed = [list(col) for col in zip(*rows)]
    pivots = independent_rows(transposed, len(rows), ring.field)
    return tuple(ring.variables[columns[p]] for p in pivots)


def minimalize(presentation):
    """
    Minimal (Cohen-style) presentation: variables along linear parts of the
    relations are eliminated so that no relation has a linear part. The
    result is presented over the prime field on the surviving variables
    :param presentation: graded or local ``AlgebraPresentation``
    :return: ``AlgebraPresentation`` isomorphic to the input
    """
    ring = presentation.ring
    base = FieldBase(ring.field)
    pivots = _pivot_variables(presentation)
    if not pivots:
        return AlgebraPresentation(presentation.name, base, ring.variables,
                                   presentation.relations, presentation.mode)
    kept = tuple(v for v in ring.variables if v not in pivots)
    reduced = eliminate(presentation.ideal, kept)
    target = PolynomialRing(ring.field, kept)
    relations = [g.to_ring(target) for g in reduced.generators]
    if presentation.mode == GRADED and relations:
        module = FreeSubmodule(target, 1, [(g,) for g in relations])
        relations = [v[0] for v in trim(module).generators]
    logger.debug(f'Minimalized {presentation.name}: eliminated {pivots}')
    return AlgebraPresentation(presentation.name, base, kept, relations,
                               presentation.mode)


def fiber(presentation):
    """
    ``A / m_R A`` over the prime field: base variables are set to zero
    """
    base_vars = presentation.base.variables
    ring = PolynomialRing(presentation.field, presentation.variables)
    zero = {v: 0 for v in base_vars}
    relations = [r.substitute(zero).to_ring(ring)
                 for r in presentation.relations]
    return AlgebraPresentation(f'{presentation.name}_fiber',
                               FieldBase(presentation.field),
                               presentation.variables, relations,
                               presentation.mode)


def mu_local(ideal):
    """
    Minimal number of generators of an ideal primary to the irrelevant
    ideal, as ``dim_k S/mI - dim_k S/I``
    """
    if ideal.is_zero():
        return 0
    product = ideal_product(maximal_ideal(ideal.ring), ideal)
    return product.vector_space_dim() - ideal.vector_space_dim()
