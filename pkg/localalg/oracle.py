"""
Brute-force linear algebra model of an Artinian local algebra, used as an
independent check of the Groebner pipeline.

The algebra is the span of its standard monomials; each variable acts by a
dense matrix whose columns are the normal forms of ``variable * basis[j]``.
"""
import logging
from itertools import combinations

from groebner import PolynomialRing, prime_field
from groebner.linalg import independent_rows, matrix_product, rank
from groebner.orders import monomial_mul
from localalg.consts import GRADED, LOCAL
from localalg.exceptions import NotArtinian
from localalg.invariants import InvariantReport
from localalg.presentation import AlgebraPresentation, FieldBase, fiber, \
    validate

logger = logging.getLogger(__name__)


class ArtinianModel:
    """
    ``basis``: standard monomials, ``basis[0] = 1``; ``multiplication``:
    one ``dimension x dimension`` matrix per variable
    """

    def __init__(self, name, field, basis, multiplication):
        self.name = name
        self.field = field
        self.basis = tuple(basis)
        self.dimension = len(self.basis)
        self.multiplication = tuple(multiplication)

    def unit_vector(self, i):
        vector = [self.field.zero] * self.dimension
        vector[i] = self.field.one
        return vector

    def act(self, v, vector):
        """Image of a coordinate vector under multiplication by variable ``v``"""
        matrix = self.multiplication[v]
        field = self.field
        out = [field.zero] * self.dimension
        for j, c in enumerate(vector):
            if c:
                for i in range(self.dimension):
                    if matrix[i][j]:
                        out[i] = field.add(out[i], field.mul(matrix[i][j], c))
        return out

    def mradical_powers(self):
        """
        Bases (as coordinate vectors) of ``m, m^2, ...`` down to the last
        non-zero power
        """
        current = [self.unit_vector(i) for i in range(1, self.dimension)]
        powers = []
        while current:
            powers.append(current)
            images = [self.act(v, vector) for vector in current
                      for v in range(len(self.multiplication))]
            images = [w for w in images if any(w)]
            chosen = independent_rows(images, self.dimension, self.field)
            current = [images[i] for i in chosen]
        return powers

    def __repr__(self):
        return f'ArtinianModel({self.name}, dim {self.dimension})'


def _standard_monomials(basis, nvars):
    unit = (0,) * nvars
    found = {unit}
    queue = [unit]
    while queue:
        mono = queue.pop()
        for i in range(nvars):
            step = tuple(1 if j == i else 0 for j in range(nvars))
            candidate = monomial_mul(mono, step)
            if candidate not in found and basis.is_standard(candidate):
                found.add(candidate)
                queue.append(candidate)
    return found


def build_model(a):
    """
    Model of a validated Artinian algebra
    :param a: ``LocalAlgebra``
    :return: ``ArtinianModel``
    """
    presentation = a.presentation
    dimension = presentation.ideal.krull_dim()
    if dimension != 0:
        raise NotArtinian(a.name, dimension)
    ring = presentation.ring
    basis = presentation.ideal.groebner_basis()
    key = ring.order.key
    monomials = sorted(_standard_monomials(basis, ring.nvars), key=key)
    position = {m: i for i, m in enumerate(monomials)}
    field = ring.field
    size = len(monomials)
    matrices = []
    for v in ring.gens():
        matrix = [[field.zero] * size for _ in range(size)]
        for j, m in enumerate(monomials):
            image = basis.normal_form(v * ring.monomial(m))
            for exponents, c in image.terms:
                matrix[position[exponents]][j] = c
        matrices.append(matrix)
    logger.debug(f'Model of {a.name}: dimension {size}')
    return ArtinianModel(a.name, field, monomials, matrices)


def commutation_check(model):
    """True when the multiplication matrices commute pairwise"""
    field = model.field
    for left, right in combinations(model.multiplication, 2):
        if matrix_product(left, right, field) != \
                matrix_product(right, left, field):
            return False
    return True


def socle_dim(model):
    """``dim`` of the common kernel of all multiplication maps"""
    rows = [row for matrix in model.multiplication for row in matrix]
    return model.dimension - rank(rows, model.dimension, model.field)


def embdim(model):
    powers = model.mradical_powers()
    if not powers:
        return 0
    square = len(powers[1]) if len(powers) > 1 else 0
    return len(powers[0]) - square


def _minimal_generators_of_m(model):
    """Variables whose images form a basis of ``m/m^2``"""
    powers = model.mradical_powers()
    square = powers[1] if len(powers) > 1 else []
    chosen = []
    rows = list(square)
    current = rank(rows, model.dimension, model.field)
    for v in range(len(model.multiplication)):
        image = model.act(v, model.unit_vector(0))
        grown = rank(rows + [image], model.dimension, model.field)
        if grown > current:
            rows.append(image)
            current = grown
            chosen.append(v)
    return chosen


def koszul_h1_dim(model):
    """
    ``dim H_1`` of the Koszul complex on a minimal generating set of ``m``:
    ``(e*D - rank d_1) - rank d_2``
    """
    field = model.field
    size = model.dimension
    ys = [model.multiplication[v] for v in _minimal_generators_of_m(model)]
    e = len(ys)
    if not e:
        return 0
    # d_1: A^e -> A, the block row [M_y1 ... M_ye]
    d1 = [[c for matrix in ys for c in matrix[i]] for i in range(size)]
    rank_d1 = rank(d1, e * size, field)
    # d_2: A^(e choose 2) -> A^e, one block column per pair i < j
    pairs = list(combinations(range(e), 2))
    d2 = [[field.zero] * (len(pairs) * size) for _ in range(e * size)]
    for p, (i, j) in enumerate(pairs):
        for r in range(size):
            for c in range(size):
                column = p * size + c
                d2[j * size + r][column] = ys[i][r][c]
                d2[i * size + r][column] = field.neg(ys[j][r][c])
    rank_d2 = rank(d2, len(pairs) * size, field)
    return e * size - rank_d1 - rank_d2


def oracle_report(model):
    """Invariant report of an Artinian algebra by linear algebra alone"""
    e = embdim(model)
    h1 = koszul_h1_dim(model)
    return InvariantReport(model.name, 0, 0, e, h1, socle_dim(model),
                           cid=h1 - e, epsilon2=h1)


def oracle_flatness(a):
    """
    Freeness count over an Artinian base:
    ``dim_k A = dim_k (A / m_R A) * dim_k R``
    :param a: ``AlgebraPresentation`` over a field or an Artinian base
    """
    base = a.base
    if base.is_field:
        return True
    whole = build_model(validate(a)).dimension
    closed = build_model(validate(fiber(a))).dimension
    ground = build_model(validate(base.presentation)).dimension
    return whole == closed * ground


def random_artinian_presentation(rng, field=None, name='random',
                                 max_vars=3, max_degree=4):
    """
    Random Artinian presentation over the prime field: a power ``v^d`` of
    every variable, plus random monomials and binomials of degree at least 2.
    Graded when every relation is homogeneous, local otherwise
    """
    field = prime_field(field)
    variables = ('x', 'y', 'z')[:rng.randint(1, max_vars)]
    ring = PolynomialRing(field, variables)
    n = len(variables)

    def random_monomial():
        d = rng.randint(2, max_degree)
        exponents = [0] * n
        for _ in range(d):
            exponents[rng.randrange(n)] += 1
        return ring.monomial(exponents)

    relations = [ring.gen(v) ** rng.randint(2, max_degree) for v in variables]
    for _ in range(rng.randint(0, 2)):
        relations.append(random_monomial())
    for _ in range(rng.randint(0, 2)):
        coefficient = rng.choice([1, -1, 2, -3])
        relations.append(random_monomial() - random_monomial().scale(
            field(coefficient)))
    relations = [r for r in relations if r]
    mode = GRADED if all(r.is_homogeneous() for r in relations) else LOCAL
    return AlgebraPresentation(name, FieldBase(field), variables, relations,
                               mode)
