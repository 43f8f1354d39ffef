"""
Exceptions for algebra presentations, invariants and the Artinian oracle
"""


class PresentationError(Exception):
    """
    Base class for errors raised while building or validating presentations
    """


class NonHomogeneousRelation(PresentationError):
    """
    Raised when a graded-mode presentation has a relation that is not
    homogeneous for the standard grading
    """
    def __init__(self, algebra, relation):
        self.algebra = algebra
        self.relation = relation
        msg = f'Relation "{relation}" of {algebra} is not homogeneous'
        super().__init__(msg)


class VariableNotNilpotent(PresentationError):
    """
    Raised when a local-mode presentation has a variable with no power in
    the relation ideal
    """
    def __init__(self, algebra, variable):
        self.algebra = algebra
        self.variable = variable
        msg = f'Variable "{variable}" of {algebra} is not nilpotent'
        super().__init__(msg)


class BaseResidueNotPrimeField(PresentationError):
    """
    Raised when the quotient by all variables is not the prime field, i.e.
    some relation has a non-zero constant term
    """
    def __init__(self, algebra, relation):
        self.algebra = algebra
        self.relation = relation
        msg = f'{algebra} has residue field other than its prime field ' + \
              f'(relation "{relation}" has a constant term)'
        super().__init__(msg)


class BaseMismatch(PresentationError):
    """
    Raised when two algebras combined in a tensor product have different
    bases
    """
    def __init__(self, left, right):
        self.left = left
        self.right = right
        msg = f'Algebras are defined over different bases: {left} vs {right}'
        super().__init__(msg)


class VariableNameClash(PresentationError):
    """
    Raised when an algebra reuses a base variable name for its own variable
    """
    def __init__(self, algebra, names):
        self.algebra = algebra
        self.names = names
        msg = f'{algebra} declares base variables as its own: {names}'
        super().__init__(msg)


class AffineModeRefused(PresentationError):
    """
    Raised when local invariants are requested for an affine presentation
    """
    def __init__(self, algebra):
        self.algebra = algebra
        msg = f'{algebra} is in affine mode; local invariants are refused'
        super().__init__(msg)


class RegularSequenceNotFound(PresentationError):
    """
    Raised when the retry budget is exhausted while searching random linear
    forms for a regular sequence
    """
    def __init__(self, algebra, length, retries):
        self.algebra = algebra
        self.length = length
        self.retries = retries
        msg = f'No regular element found after {retries} draws at position ' + \
              f'{length + 1} for {algebra}; use a larger prime field'
        super().__init__(msg)


class NegativeDefect(PresentationError):
    """
    Raised when a computed complete intersection defect is negative, which
    means an internal computation is wrong
    """
    def __init__(self, algebra, value):
        self.algebra = algebra
        self.value = value
        msg = f'Negative complete intersection defect {value} for {algebra}'
        super().__init__(msg)


class ReportInconsistency(PresentationError):
    """
    Raised when an invariant report violates one of its identities
    """
    def __init__(self, algebra, identity):
        self.algebra = algebra
        self.identity = identity
        msg = f'Invariant report of {algebra} violates "{identity}"'
        super().__init__(msg)


class NotArtinian(PresentationError):
    """
    Raised when the Artinian oracle is asked for an algebra of positive
    dimension
    """
    def __init__(self, algebra, dim):
        self.algebra = algebra
        self.dim = dim
        msg = f'{algebra} is not Artinian (dimension {dim})'
        super().__init__(msg)


class PresentationFileError(PresentationError):
    """
    Raised when a presentation file does not follow the file format
    """
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        msg = f'line {line}: {reason}'
        super().__init__(msg)
