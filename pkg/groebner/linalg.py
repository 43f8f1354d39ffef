"""
Exact dense linear algebra over the prime fields, on top of sympy's
``DomainMatrix`` (QQ or GF(p)). Vectors are lists of field scalars or
sparse ``{coordinate: scalar}`` mappings.
"""
from sympy.polys.matrices import DomainMatrix


def to_domain_matrix(rows, ncols, field):
    domain = field.domain
    convert = field.to_domain
    return DomainMatrix([[convert(c) for c in row] for row in rows],
                        (len(rows), ncols), domain)


def rank(rows, ncols, field):
    """Rank of the matrix with the given rows"""
    if not rows or not ncols:
        return 0
    return to_domain_matrix(rows, ncols, field).rank()


def independent_rows(rows, ncols, field):
    """
    Indices of the earliest maximal linearly independent subset of ``rows``
    """
    if not rows or not ncols:
        return []
    columns = [[row[j] for row in rows] for j in range(ncols)]
    _, pivots = to_domain_matrix(columns, len(rows), field).rref()
    return list(pivots)


def densify(vectors, field):
    """
    Lays sparse vectors out on the sorted union of their coordinates;
    returns ``(rows, coordinates)``
    """
    coordinates = sorted({k for v in vectors for k in v})
    position = {k: i for i, k in enumerate(coordinates)}
    rows = []
    for v in vectors:
        row = [field.zero] * len(coordinates)
        for k, c in v.items():
            row[position[k]] = c
        rows.append(row)
    return rows, coordinates


def independent_subset(vectors, field):
    """Indices of an earliest maximal independent subset of sparse vectors"""
    rows, coordinates = densify(vectors, field)
    return independent_rows(rows, len(coordinates), field)


def sparse_rank(vectors, field):
    rows, coordinates = densify(vectors, field)
    return rank(rows, len(coordinates), field)


def matrix_vector(matrix, vector, field):
    """``matrix * vector`` for a dense matrix given as a list of rows"""
    mul, add = field.mul, field.add
    out = []
    for row in matrix:
        acc = field.zero
        for a, b in zip(row, vector):
            if a and b:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return out


def matrix_product(left, right, field):
    """``left * right`` for dense row-major matrices"""
    columns = list(zip(*right)) if right else []
    return [matrix_vector(columns, row, field) for row in left] \
        if columns else [[] for _ in left]
